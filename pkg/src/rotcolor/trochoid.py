"""Regular star polygons rolling on one another, and the torus-knot colorings
they produce.

The moving polygon Pi(m, k) starts on top of the fixed polygon Pi(n, l),
sharing the edge from vertex 0 to vertex 1.  Step ``i`` rotates it about its
vertex ``[i]`` (which sits on fixed vertex ``[i]``) by ``theta(m, k; n, l)``,
after which moving vertex ``[i+1]`` lands on fixed vertex ``[i+1]``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .alexander import torus_alexander_closed_form
from .coloring import Coloring, angle_distance
from .diagram import _torus_params, arc_index
from .errors import BadParameters, ContactViolation, TrivialColoring
from .laurent import LaurentPoly

CONTACT_TOL = 1e-9


def _check_polygon(m: int, k: int) -> None:
    if m < 2 or not 1 <= k <= m - 1:
        raise BadParameters(f"need m >= 2 and 1 <= k <= m-1, got m={m}, k={k}")


def star_polygon_vertices(m: int, k: int, side: float = 1.0) -> list[complex]:
    """Vertices ``v^{m,k}_0 .. v^{m,k}_{m-1}`` of Pi(m, k).

    ``v_i`` is vertex ``[ik]`` of a counterclockwise regular m-gon; the
    polygon is placed with ``v_0 = 0`` and ``v_1 = side``.
    """
    _check_polygon(m, k)
    if side <= 0:
        raise BadParameters("side length must be positive")
    w = cmath.exp(2j * math.pi * k / m)
    # v_i = side * (1 + w + ... + w^(i-1))
    return [side * (cmath.exp(2j * math.pi * ((k * i) % m) / m) - 1) / (w - 1) for i in range(m)]


def interior_angle(m: int, k: int) -> float:
    return abs((m - 2 * k) * math.pi / m)


def theta(m: int, k: int, n: int, l: int) -> float:
    """Rotation angle of one (m, k; n, l)-trochoid step."""
    _check_polygon(m, k)
    _check_polygon(n, l)
    return ((m - 2 * k) / m - (n - 2 * l) / n) * math.pi


@dataclass(frozen=True)
class Placement:
    """Orientation-preserving isometry ``z -> rot * z + shift``."""

    rot: complex
    shift: complex

    def __call__(self, z: complex) -> complex:
        return self.rot * z + self.shift

    @property
    def angle(self) -> float:
        return cmath.phase(self.rot)

    def then_rotate(self, center: complex, angle: float) -> Placement:
        w = cmath.exp(1j * angle)
        return Placement(self.rot * w, (self.shift - center) * w + center)


@dataclass
class TrochoidTrace:
    m: int
    k: int
    n: int
    l: int
    theta: float
    side: float
    fixed: list[complex]
    model: list[complex]
    placements: list[Placement]  # index i = after step i (0 = initial)
    pivots: list[complex]  # pivots[i-1] = rotation center of step i
    z_grid: np.ndarray  # (n+1) x m, z_grid[i, j] = vertex [i+j+1] after step i

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.m, self.k, self.n, self.l)

    @property
    def steps(self) -> int:
        return len(self.placements) - 1

    def vertices_at(self, step: int) -> list[complex]:
        p = self.placements[step]
        return [p(v) for v in self.model]


def trochoid_trace(m: int, k: int, n: int, l: int, side: float = 1.0) -> TrochoidTrace:
    th = theta(m, k, n, l)
    fixed = star_polygon_vertices(n, l, side)
    model = star_polygon_vertices(m, k, side)
    tol = CONTACT_TOL * side
    place = Placement(1 + 0j, 0j)
    placements, pivots = [place], []
    for i in range(1, n + 1):
        pivot = place(model[i % m])
        if abs(pivot - fixed[i % n]) > tol:
            raise ContactViolation(f"step {i}: moving vertex [{i}] is off fixed vertex [{i}]")
        place = place.then_rotate(pivot, th)
        placements.append(place)
        pivots.append(pivot)
        hit = place(model[(i + 1) % m])
        if abs(hit - fixed[(i + 1) % n]) > tol:
            raise ContactViolation(
                f"step {i}: vertex [{i + 1}] misses by {abs(hit - fixed[(i + 1) % n]):.3g}"
            )
    grid = np.array(
        [[placements[i](model[(i + j + 1) % m]) for j in range(m)] for i in range(n + 1)],
        dtype=complex,
    )
    return TrochoidTrace(m, k, n, l, th, side, fixed, model, placements, pivots, grid)


def trochoid_coloring(p: int, q: int, k: int, l: int) -> Coloring:
    """Coloring of ``torus_diagram(p, q)`` read off the (|p|, k; |q|, l)-trochoid.

    Arc ``a_ij`` gets the center ``z_ij``.  For ``p*q < 0`` every crossing
    of the diagram is negative; the mirrored trochoid (complex-conjugate
    centers) colors it at the same angle.
    """
    P, Q = _torus_params(p, q)
    if not (1 <= k <= P - 1 and 1 <= l <= Q - 1):
        raise BadParameters(f"need 1 <= k <= {P - 1}, 1 <= l <= {Q - 1}")
    tr = trochoid_trace(P, k, Q, l)
    centers: list[complex] = [0j] * (Q * (P - 1))
    for i in range(Q):
        for j in range(1, P):
            centers[arc_index(i, j, P, Q)] = complex(tr.z_grid[i, j])
    if p * q < 0:
        centers = [z.conjugate() for z in centers]
    c = Coloring(tr.theta, tuple(centers))
    if c.is_trivial():
        raise TrivialColoring(f"trochoid ({P},{k};{Q},{l}) gave a constant coloring")
    return c


@dataclass
class FactorizationReport:
    p: int
    q: int
    angles: list[float]
    alexander: LaurentPoly
    product_coeffs: list[complex]
    r: int
    max_coeff_error: float
    distinct: bool
    min_separation: float

    @property
    def ok(self) -> bool:
        return self.distinct and self.max_coeff_error < 1e-10


def verify_factorization(p: int, q: int) -> FactorizationReport:
    """Expand ``prod (t - exp(i theta(|p|,k;|q|,l)))`` and compare it with the
    closed-form torus-knot Alexander polynomial."""
    P, Q = _torus_params(p, q)
    angles = [theta(P, k, Q, l) for k in range(1, P) for l in range(1, Q)]
    prod = np.array([1 + 0j])  # ascending coefficients
    for a in angles:
        prod = np.convolve(prod, [-cmath.exp(1j * a), 1])
    delta = torus_alexander_closed_form(p, q)
    nz = np.nonzero(np.abs(prod) > 1e-12)[0]
    r = delta.min_deg - int(nz[0])
    width = max(len(prod), delta.span + 1 + max(0, r))
    target = np.zeros(width + abs(r), dtype=complex)
    got = np.zeros_like(target)
    for e, c in delta.to_dict().items():
        target[e] = c
    got[max(r, 0): max(r, 0) + len(prod)] = prod
    err = float(np.max(np.abs(target - got)))
    seps = [angle_distance(a, b) for i, a in enumerate(angles) for b in angles[i + 1:]]
    min_sep = min(seps, default=math.inf)
    return FactorizationReport(
        p, q, angles, delta, list(prod), r, err, min_sep > 1e-9, min_sep
    )
