"""Exact integer Laurent polynomials in one variable ``t``.

A polynomial is stored as ``(min_deg, coeffs)`` where ``coeffs[i]`` is the
coefficient of ``t**(min_deg + i)``.  The zero polynomial is ``(0, ())``.
Coefficients are Python ints, so nothing overflows.
"""

from __future__ import annotations

import cmath
import re
from functools import reduce
from math import gcd as igcd
from typing import Iterable, Mapping, Sequence

from .errors import BothZero, NotDivisible


class LaurentPoly:
    __slots__ = ("min_deg", "coeffs")

    def __init__(self, coeffs: Sequence[int] = (), min_deg: int = 0):
        coeffs = [int(c) for c in coeffs]
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.min_deg, self.coeffs = 0, ()
        else:
            self.min_deg, self.coeffs = int(min_deg) + lo, tuple(coeffs[lo:hi])

    # construction helpers

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls((coeff,), exp)

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls((c,), 0)

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentPoly:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    def to_dict(self) -> dict[int, int]:
        return {self.min_deg + i: c for i, c in enumerate(self.coeffs) if c}

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        return parse(text)

    # basic properties

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """True for ``±t**k``, the units of Z[t, 1/t]."""
        return len(self.coeffs) == 1 and abs(self.coeffs[0]) == 1

    @property
    def max_deg(self) -> int:
        return self.min_deg + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """Degree span, ``max_deg - min_deg``; -1 for zero."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        return reduce(igcd, self.coeffs, 0)

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.min_deg + k)

    def derivative(self) -> LaurentPoly:
        return LaurentPoly.from_dict({e - 1: e * c for e, c in self.to_dict().items()})

    # arithmetic

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_deg == other.min_deg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_deg, self.coeffs))

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.min_deg)

    def __sub__(self, other):
        return add(self, -_coerce(other))

    def __rsub__(self, other):
        return add(_coerce(other), -self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_unit():
                raise ValueError("only units have Laurent inverses")
            return LaurentPoly.monomial(-self.min_deg, self.coeffs[0]) ** (-e)
        result = LaurentPoly.const(1)
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x):
        """Evaluate at a number (int, float, complex or Fraction)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x**self.min_deg if self.min_deg else acc

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def __str__(self):
        return to_text(self)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


T = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a.coeffs:
        return b
    if not b.coeffs:
        return a
    lo = min(a.min_deg, b.min_deg)
    hi = max(a.max_deg, b.max_deg)
    out = [0] * (hi - lo + 1)
    for i, c in enumerate(a.coeffs):
        out[a.min_deg - lo + i] += c
    for i, c in enumerate(b.coeffs):
        out[b.min_deg - lo + i] += c
    return LaurentPoly(out, lo)


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return LaurentPoly(out, a.min_deg + b.min_deg)


def _divmod_poly(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Long division of coefficient lists (lowest degree first) over Z.

    Raises NotDivisible as soon as a quotient coefficient is not integral.
    """
    num = list(num)
    dl = len(den) - 1
    lc = den[-1]
    qlen = len(num) - dl
    if qlen <= 0:
        return [], num
    quot = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = num[k + dl]
        if c == 0:
            continue
        qk, r = divmod(c, lc)
        if r:
            raise NotDivisible(f"leading coefficient {lc} does not divide {c}")
        quot[k] = qk
        for j, d in enumerate(den):
            num[k + j] -= qk * d
    return quot, num[:dl]


def div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q * b == a``; raise NotDivisible otherwise."""
    if b.is_zero():
        raise NotDivisible("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    quot, rem = _divmod_poly(list(a.coeffs), b.coeffs)
    if any(rem) or not quot:
        raise NotDivisible(f"{b} does not divide {a}")
    return LaurentPoly(quot, a.min_deg - b.min_deg)


def divides(b: LaurentPoly, a: LaurentPoly) -> bool:
    try:
        div_exact(a, b)
    except NotDivisible:
        return False
    return True


def normalize(a: LaurentPoly) -> LaurentPoly:
    """Canonical associate: shift so ``min_deg == 0`` and make the leading
    coefficient positive.  Zero maps to zero."""
    if a.is_zero():
        return a
    sign = -1 if a.coeffs[-1] < 0 else 1
    return LaurentPoly([sign * c for c in a.coeffs], 0)


def _primitive(coeffs: Sequence[int]) -> list[int]:
    g = reduce(igcd, coeffs, 0)
    if g == 0:
        return list(coeffs)
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _prem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of ``f`` by ``g`` (lists, lowest degree first)."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while len(r) - 1 >= dg and any(r):
        shift = len(r) - 1 - dg
        c = r[-1]
        r = [lc * x for x in r]
        for j, y in enumerate(g):
            r[shift + j] -= c * y
        while r and r[-1] == 0:
            r.pop()
    return r


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in Z[t, 1/t], normalized.

    Content and primitive part are handled separately (Gauss's lemma); the
    primitive parts go through a primitive polynomial remainder sequence.
    """
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    if a.is_zero():
        return normalize(b)
    if b.is_zero():
        return normalize(a)
    cont = igcd(a.content(), b.content())
    f = _primitive(a.coeffs)
    g = _primitive(b.coeffs)
    if len(f) < len(g):
        f, g = g, f
    while len(g) > 1:
        r = _prem(f, g)
        if not r:
            break
        f, g = g, _primitive(r)
    if len(g) == 1:
        g = [1]
    return normalize(LaurentPoly([cont * c for c in g]))


def gcd_many(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    acc = ZERO
    for p in polys:
        if p.is_zero():
            continue
        acc = normalize(p) if acc.is_zero() else gcd(acc, p)
        if acc.is_unit():
            break
    return acc


def squarefree_part(a: LaurentPoly) -> LaurentPoly:
    """``a / gcd(a, a')`` on the polynomial part (powers of t stripped)."""
    p = normalize(a)
    if p.span <= 0:
        return p
    g = gcd(p, p.derivative())
    return normalize(div_exact(p, g))


def eval_unit_circle(a: LaurentPoly, theta: float) -> complex:
    """Evaluate ``a(exp(i*theta))`` in double precision (Horner)."""
    z = cmath.exp(1j * theta)
    acc = 0j
    for c in reversed(a.coeffs):
        acc = acc * z + c
    return acc * cmath.exp(1j * theta * a.min_deg)


# text form

def to_text(a: LaurentPoly) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for e in range(a.max_deg, a.min_deg - 1, -1):
        c = a.coeffs[e - a.min_deg]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+)\s*\*?\s*)?
        (t(?:\s*\^\s*\(?\s*(-?\d+)\s*\)?)?)?
        \s*""",
    re.VERBOSE,
)


def parse(text: str) -> LaurentPoly:
    """Parse the grammar produced by :func:`to_text` (``3t^2 - t^-1 + 1``)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, num, var, exp = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator before {s[pos:]!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp is not None else 1) if var else 0
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly.from_dict(terms)
