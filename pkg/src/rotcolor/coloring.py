"""Colorings of knot diagrams by the quandle of plane rotations.

A rotation about ``z`` by angle ``theta`` is the pair ``(z, theta)``; the
quandle operation conjugates one rotation by another, which moves the first
center by the second rotation and keeps the first angle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .alexander import alexander_polynomial, fox_matrix
from .diagram import Diagram
from .errors import ArityMismatch, TrivialColoring, ZeroPolynomial
from .laurent import LaurentPoly, eval_unit_circle, normalize, squarefree_part

DEFAULT_RANK_TOL = 1e-9
DEFAULT_ROOT_TOL = 1e-6
DEFAULT_CHECK_TOL = 1e-9


def wrap_angle(theta: float) -> float:
    """Representative of ``theta`` in ``(-pi, pi]``."""
    r = math.remainder(theta, 2 * math.pi)
    return math.pi if r == -math.pi else r


def angle_distance(a: float, b: float) -> float:
    return abs(math.remainder(a - b, 2 * math.pi))


@dataclass(frozen=True)
class Rotation:
    center: complex
    angle: float

    def close_to(self, other: Rotation, tol: float = 1e-9) -> bool:
        return abs(self.center - other.center) <= tol and angle_distance(self.angle, other.angle) <= tol

    def apply(self, z: complex) -> complex:
        return (z - self.center) * cmath.exp(1j * self.angle) + self.center


def quandle_op(x: Rotation, y: Rotation) -> Rotation:
    """``x * y``: the center of ``x`` rotated about ``y.center`` by ``y.angle``."""
    return Rotation((x.center - y.center) * cmath.exp(1j * y.angle) + y.center, x.angle)


def quandle_op_inv(x: Rotation, y: Rotation) -> Rotation:
    """The unique ``w`` with ``quandle_op(w, y) == x``."""
    return Rotation((x.center - y.center) * cmath.exp(-1j * y.angle) + y.center, x.angle)


@dataclass(frozen=True)
class Coloring:
    """All arcs share one angle; ``centers[a]`` is the center for arc ``a``."""

    angle: float
    centers: tuple[complex, ...]
    angles: tuple[float, ...] | None = None  # per-arc override, only for negative tests

    def __post_init__(self):
        object.__setattr__(self, "centers", tuple(complex(z) for z in self.centers))

    def rotation(self, arc: int) -> Rotation:
        a = self.angles[arc] if self.angles is not None else self.angle
        return Rotation(self.centers[arc], a)

    def is_trivial(self, tol: float = 1e-9) -> bool:
        if not self.centers:
            return True
        scale = max(1.0, max(abs(z) for z in self.centers))
        z0 = self.centers[0]
        return all(abs(z - z0) <= tol * scale for z in self.centers)


@dataclass
class CheckResult:
    ok: bool
    residuals: list[float]
    scale: float

    def __bool__(self):
        return self.ok

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)


def check_coloring(d: Diagram, c: Coloring, tol: float = DEFAULT_CHECK_TOL) -> CheckResult:
    """Test the crossing condition everywhere.

    At each crossing the outgoing under-arc must carry ``under_in * over``
    (with the inverse operation at negative crossings).  Residuals combine
    the center mismatch and the angle mismatch; the test is relative to the
    largest center magnitude (at least 1).
    """
    if len(c.centers) != d.n_arcs or (c.angles is not None and len(c.angles) != d.n_arcs):
        raise ArityMismatch(f"coloring has {len(c.centers)} centers for {d.n_arcs} arcs")
    scale = max([1.0] + [abs(z) for z in c.centers])
    residuals = []
    for cr in d.crossings:
        op = quandle_op if cr.sign > 0 else quandle_op_inv
        want = op(c.rotation(cr.under_in), c.rotation(cr.over))
        got = c.rotation(cr.under_out)
        res = abs(got.center - want.center) + angle_distance(got.angle, want.angle) * scale
        residuals.append(res)
    ok = all(r <= tol * scale for r in residuals)
    return CheckResult(ok, residuals, scale)


def build_X_theta(d: Diagram, theta: float) -> np.ndarray:
    """Alexander matrix specialized at ``t = exp(i theta)``.

    A row vector of centers ``z`` with ``z @ X == 0`` is a coloring at angle
    ``theta``.
    """
    n = d.n_arcs
    x = np.zeros((n, n), dtype=complex)
    for i, c in enumerate(d.crossings):
        w = cmath.exp(1j * c.sign * theta)
        x[c.under_in, i] += w
        x[c.over, i] += 1 - w
        x[i, i] -= 1
    return x


def eval_matrix(m: list[list[LaurentPoly]], theta: float) -> np.ndarray:
    return np.array([[eval_unit_circle(e, theta) for e in row] for row in m], dtype=complex).reshape(
        len(m), len(m)
    )


def numerical_rank(m: np.ndarray, rel_tol: float = DEFAULT_RANK_TOL) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > rel_tol * s[0]))


def left_null_space(m: np.ndarray, rel_tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Orthonormal rows spanning ``{z : z @ m == 0}``."""
    m = np.asarray(m)
    n = m.shape[0]
    if m.size == 0:
        return np.eye(n, dtype=complex)
    # z @ m == 0  <=>  m.T @ z == 0
    _, s, vh = np.linalg.svd(m.T)
    rank = int(np.sum(s > rel_tol * s[0])) if s.size and s[0] > 0 else 0
    return vh[rank:].conj()


@dataclass
class ColoringSpace:
    angle: float
    dimension: int
    basis: list[np.ndarray] = field(repr=False)

    def colorings(self) -> list[Coloring]:
        return [Coloring(self.angle, tuple(v)) for v in self.basis]

    def nontrivial(self) -> list[Coloring]:
        return self.colorings()[1:]


def coloring_space(d: Diagram, theta: float, rel_tol: float = DEFAULT_RANK_TOL) -> ColoringSpace:
    """All colorings with angle ``theta``.

    The first basis vector is the all-ones (constant) coloring; the others
    are orthonormal and orthogonal to it.
    """
    n = d.n_arcs
    if n == 0:
        return ColoringSpace(theta, 0, [])
    null = left_null_space(build_X_theta(d, theta), rel_tol)
    ones = np.ones(n, dtype=complex)
    u = ones / math.sqrt(n)
    rest = null - np.outer(null @ u.conj(), u)
    basis = [ones]
    if len(rest):
        _, s, vh = np.linalg.svd(rest)
        basis += [vh[i] for i in range(len(s)) if s[i] > 1e-8]
    return ColoringSpace(theta, len(basis), basis)


def _companion_roots(coeffs: list[int]) -> np.ndarray:
    """Eigenvalues of the companion matrix of ``sum coeffs[i] t^i``."""
    deg = len(coeffs) - 1
    if deg < 1:
        return np.zeros(0, dtype=complex)
    lead = coeffs[-1]
    comp = np.zeros((deg, deg), dtype=complex)
    comp[1:, :-1] = np.eye(deg - 1)
    comp[:, -1] = [-c / lead for c in coeffs[:-1]]
    return np.linalg.eigvals(comp)


def unit_circle_roots(delta: LaurentPoly, tol: float = DEFAULT_ROOT_TOL) -> list[float]:
    """Angles in ``(-pi, pi]`` of the distinct roots of ``delta`` on ``|t| = 1``.

    Repeated factors are removed exactly first so the companion matrix only
    ever sees simple roots.
    """
    if delta.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    sf = squarefree_part(normalize(delta))
    roots = _companion_roots(list(sf.coeffs))
    angles = sorted(wrap_angle(cmath.phase(r)) for r in roots if abs(abs(r) - 1) <= tol)
    out: list[float] = []
    for a in angles:
        if not out or angle_distance(a, out[-1]) > tol:
            out.append(a)
    if len(out) > 1 and angle_distance(out[0], out[-1]) <= tol:
        out.pop()
    return out


@dataclass
class Verdict:
    colorable: bool
    alexander: LaurentPoly
    witness_angles: list[float]
    dimensions: list[int]

    @property
    def consistent(self) -> bool:
        """Every witness angle really carries a non-trivial coloring."""
        return all(dim >= 2 for dim in self.dimensions)


def is_colorable(d: Diagram, tol: float = DEFAULT_ROOT_TOL, rel_tol: float = DEFAULT_RANK_TOL) -> Verdict:
    """Decide colorability from the roots of the Alexander polynomial on the
    unit circle, and confirm each witness angle with the null space of X."""
    delta = alexander_polynomial(d)
    angles = unit_circle_roots(delta, tol)
    dims = [coloring_space(d, th, rel_tol).dimension for th in angles]
    return Verdict(bool(angles), delta, angles, dims)


def normalize_coloring(c: Coloring, tol: float = 1e-9) -> Coloring:
    """Apply ``z -> a z + b`` sending the first center to 0 and the first
    center distinct from it to 1."""
    if not c.centers:
        raise TrivialColoring("empty coloring")
    scale = max(1.0, max(abs(z) for z in c.centers))
    z0 = c.centers[0]
    for z in c.centers[1:]:
        if abs(z - z0) > tol * scale:
            z1 = z
            break
    else:
        raise TrivialColoring("all centers coincide")
    alpha = 1 / (z1 - z0)
    return Coloring(c.angle, tuple((z - z0) * alpha for z in c.centers))


def alexander_matrix_at(d: Diagram, theta: float) -> np.ndarray:
    """``fox_matrix`` evaluated entrywise on the unit circle; agrees with
    :func:`build_X_theta`."""
    return eval_matrix(fox_matrix(d), theta)
