"""Alexander matrix of a diagram and the polynomials read off its minors."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .diagram import Diagram, _torus_params
from .errors import IndexOutOfRange
from .laurent import ONE, ZERO, LaurentPoly, div_exact, gcd_many, normalize

Matrix = list[list[LaurentPoly]]


def fox_matrix(d: Diagram) -> Matrix:
    """n x n matrix whose column ``i`` encodes the relation at crossing ``i``.

    Row ``under_in`` gets ``t^e``, row ``over`` gets ``1 - t^e`` and row ``i``
    gets ``-1``; coinciding rows are summed.
    """
    n = d.n_arcs
    m = [[ZERO] * n for _ in range(n)]
    for i, c in enumerate(d.crossings):
        te = LaurentPoly.monomial(c.sign)
        m[c.under_in][i] = m[c.under_in][i] + te
        m[c.over][i] = m[c.over][i] + (ONE - te)
        m[i][i] = m[i][i] - ONE
    return m


def determinant(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant up to a unit ``±t^k``, by fraction-free Bareiss elimination.

    Each row is first multiplied by a power of ``t`` so every entry is an
    ordinary polynomial; the result is therefore off by that power of ``t``.
    """
    n = len(m)
    if n == 0:
        return ONE
    rows = []
    for row in m:
        lo = min((e.min_deg for e in row if not e.is_zero()), default=0)
        rows.append([e.shift(-lo) for e in row])
    sign = 1
    prev = ONE
    for k in range(n - 1):
        candidates = [r for r in range(k, n) if not rows[r][k].is_zero()]
        if not candidates:
            return ZERO
        piv = min(candidates, key=lambda r: (rows[r][k].span, r))
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri = rows[i]
            rk = rows[k]
            for j in range(k + 1, n):
                num = ri[j] * pk - rik * rk[j]
                ri[j] = div_exact(num, prev) if not num.is_zero() else ZERO
            ri[k] = ZERO
        prev = pk
    det = rows[n - 1][n - 1]
    return -det if sign < 0 else det


def minors(m: Matrix, size: int) -> Iterator[LaurentPoly]:
    n = len(m)
    for rs in combinations(range(n), size):
        for cs in combinations(range(n), size):
            yield determinant([[m[r][c] for c in cs] for r in rs])


def _minor_gcd(m: Matrix, size: int) -> LaurentPoly:
    if size <= 0:
        return ONE
    g = gcd_many(minors(m, size))
    return g if not g.is_zero() else ZERO


def ith_alexander(d: Diagram, i: int) -> LaurentPoly:
    """gcd of all ``(n-i-1)``-minors of the Alexander matrix, normalized.

    ``i = n-1`` gives 1 by convention, as does any diagram with ``n <= 1``.
    """
    n = d.n_arcs
    top = max(n - 1, 0)
    if not 0 <= i <= top:
        raise IndexOutOfRange(f"i={i} outside 0..{top}")
    if n <= 1 or i == n - 1:
        return ONE
    return normalize(_minor_gcd(fox_matrix(d), n - i - 1))


def alexander_polynomial(d: Diagram) -> LaurentPoly:
    return ith_alexander(d, 0)


def alexander_tower(d: Diagram) -> list[LaurentPoly]:
    """``[Delta^(0), ..., Delta^(n-1)]``.

    Each term divides the previous one, so once a unit shows up the rest of
    the tower is 1 and no further minors are needed.
    """
    n = d.n_arcs
    if n <= 1:
        return [ONE]
    m = fox_matrix(d)
    tower = []
    for i in range(n):
        if i == n - 1 or (tower and tower[-1].is_unit()):
            tower.append(ONE)
        else:
            tower.append(normalize(_minor_gcd(m, n - i - 1)))
    return tower


def elementary_divisors(d: Diagram) -> list[LaurentPoly]:
    """``e^(i) = Delta^(i) / Delta^(i+1)`` for ``0 <= i <= n-2``."""
    return divisors_from_tower(alexander_tower(d))


def divisors_from_tower(tower: Sequence[LaurentPoly]) -> list[LaurentPoly]:
    return [normalize(div_exact(tower[i], tower[i + 1])) for i in range(len(tower) - 1)]


def torus_alexander_closed_form(p: int, q: int) -> LaurentPoly:
    """``(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`` with ``|p|, |q|``."""
    P, Q = _torus_params(p, q)
    t = LaurentPoly.monomial(1)
    num = (t ** (P * Q) - 1) * (t - 1)
    den = (t**P - 1) * (t**Q - 1)
    return normalize(div_exact(num, den))
