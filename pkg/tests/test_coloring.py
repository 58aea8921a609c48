import cmath
import math
from itertools import permutations

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from rotcolor.alexander import alexander_polynomial
from rotcolor.coloring import (
    Coloring,
    Rotation,
    alexander_matrix_at,
    build_X_theta,
    check_coloring,
    coloring_space,
    is_colorable,
    normalize_coloring,
    numerical_rank,
    quandle_op,
    quandle_op_inv,
    unit_circle_roots,
)
from rotcolor.diagram import braid_closure_pd, parse_pd, torus_diagram
from rotcolor.errors import ArityMismatch, TrivialColoring, ZeroPolynomial
from rotcolor.laurent import ZERO, LaurentPoly, eval_unit_circle
from rotcolor.trochoid import theta, trochoid_coloring

from conftest import FIGURE_EIGHT_PD, TREFOIL_PD, close_angle
from test_alexander import sympy_matrix

t = LaurentPoly.monomial(1)
W3 = cmath.exp(1j * math.pi / 3)

finite = st.floats(-10, 10, allow_nan=False)
rotations = st.builds(Rotation, st.builds(complex, finite, finite), st.floats(-7, 7))


def test_quandle_op_examples():
    x = Rotation(0.3 + 2j, 0.7)
    assert quandle_op(x, x).close_to(x)
    r = quandle_op(Rotation(1, math.pi / 2), Rotation(0, math.pi / 2))
    assert r.close_to(Rotation(1j, math.pi / 2), 1e-12)
    back = quandle_op_inv(Rotation(1j, math.pi / 2), Rotation(0, math.pi / 2))
    assert back.close_to(Rotation(1, math.pi / 2), 1e-12)
    assert quandle_op_inv(x, Rotation(5 - 1j, 0.0)).close_to(x)


def test_trefoil_equilateral_relations():
    # some assignment of the triangle vertices to the three arcs is a coloring
    d = parse_pd(TREFOIL_PD)
    hits = [p for p in permutations([0, 1, W3]) if check_coloring(d, Coloring(math.pi / 3, p)).ok]
    assert hits
    assert not check_coloring(d, Coloring(math.pi / 3, (0, 1, 2))).ok


@given(rotations)
def test_q1(x):
    assert quandle_op(x, x).close_to(x, 1e-10)


@given(rotations, rotations)
def test_q2(w, x):
    assert quandle_op_inv(quandle_op(w, x), x).close_to(w, 1e-9)
    assert quandle_op(quandle_op_inv(w, x), x).close_to(w, 1e-9)


@given(rotations, rotations, rotations)
def test_q3(x, y, z):
    lhs = quandle_op(quandle_op(x, y), z)
    rhs = quandle_op(quandle_op(x, z), quandle_op(y, z))
    assert lhs.close_to(rhs, 1e-9)


def test_check_coloring_trefoil(trefoil):
    c = Coloring(math.pi / 3, (0, 1, W3))
    c2 = Coloring(math.pi / 3, (1, 0, W3))
    assert check_coloring(trefoil, c).ok or check_coloring(trefoil, c2).ok
    assert check_coloring(trefoil, Coloring(math.pi / 3, (2 + 1j,) * 3)).ok
    with pytest.raises(ArityMismatch):
        check_coloring(trefoil, Coloring(1.0, (0, 1)))


def test_check_coloring_figure_eight_rejects(figure_eight):
    rng = np.random.default_rng(5)
    for _ in range(20):
        z = rng.normal(size=4) + 1j * rng.normal(size=4)
        assert not check_coloring(figure_eight, Coloring(math.pi / 3, tuple(z))).ok
    assert check_coloring(figure_eight, Coloring(math.pi / 3, (1j,) * 4)).ok


def test_constant_coloring_always_passes():
    for d in (parse_pd(TREFOIL_PD), parse_pd(FIGURE_EIGHT_PD), torus_diagram(3, 5)):
        for th in (0.1, 2.0, -1.3):
            assert check_coloring(d, Coloring(th, (3 - 2j,) * d.n_arcs)).ok


def test_build_X_theta_agrees_with_fox_matrix():
    rng = np.random.default_rng(1)
    for d in (parse_pd(TREFOIL_PD), parse_pd(FIGURE_EIGHT_PD), torus_diagram(-3, 4)):
        for th in rng.uniform(-math.pi, math.pi, 20):
            assert np.max(np.abs(build_X_theta(d, th) - alexander_matrix_at(d, th))) < 1e-12


def test_X_theta_at_zero(trefoil):
    x = build_X_theta(trefoil, 0.0)
    assert np.allclose(x.sum(axis=0), 0)
    assert np.allclose(np.ones(3) @ x, 0)


def test_trefoil_rank_sympy_oracle(trefoil):
    exact = sympy_matrix(trefoil).subs(sympy.Symbol("t"), sympy.exp(sympy.I * sympy.pi / 3))
    assert exact.applyfunc(sympy.nsimplify).rank(simplify=True) == 1
    generic = sympy_matrix(trefoil).subs(sympy.Symbol("t"), sympy.Rational(1, 2))
    assert generic.rank() == 2
    assert numerical_rank(build_X_theta(trefoil, math.pi / 3)) == 1
    assert numerical_rank(build_X_theta(trefoil, 1.0)) == 2


def test_numerical_rank_basics():
    assert numerical_rank(np.eye(3)) == 3
    assert numerical_rank(np.zeros((3, 3))) == 0
    assert numerical_rank(np.diag([1, 1e-12, 1])) == 2


def test_coloring_space_generic(trefoil):
    sp = coloring_space(trefoil, 1.0)
    assert sp.dimension == 1
    assert np.allclose(sp.basis[0], np.ones(3))


def test_coloring_space_torus_3_2():
    d = torus_diagram(3, 2)
    sp = coloring_space(d, math.pi / 3)
    assert sp.dimension == 2
    for c in sp.colorings():
        assert check_coloring(d, c, 1e-8).ok
    nt = normalize_coloring(sp.nontrivial()[0])
    tr = normalize_coloring(trochoid_coloring(3, 2, 1, 1))
    assert np.max(np.abs(np.array(nt.centers) - np.array(tr.centers))) < 1e-8


def test_coloring_space_granny_dimension_3():
    d = parse_pd(braid_closure_pd([1, 1, 1, 2, 2, 2], 3))
    assert coloring_space(d, math.pi / 3).dimension == 3
    assert coloring_space(d, 1.0).dimension == 1


def test_unit_circle_roots():
    got = unit_circle_roots(t**2 - t + 1)
    assert len(got) == 2 and close_angle(got[0], -math.pi / 3) and close_angle(got[1], math.pi / 3)
    assert unit_circle_roots(t**2 - 3 * t + 1, 1e-6) == []
    with pytest.raises(ZeroPolynomial):
        unit_circle_roots(ZERO)


def test_unit_circle_roots_torus_3_4():
    delta = t**6 - t**5 + t**3 - t + 1
    got = unit_circle_roots(delta)
    expected = sorted(s * a for s in (1, -1) for a in (math.pi / 6, math.pi / 3, 5 * math.pi / 6))
    assert len(got) == 6
    assert all(close_angle(a, b) for a, b in zip(got, expected))
    # oracle: exact roots from sympy, and the trochoid angle list
    exact = sorted(float(sympy.arg(r)) for r in sympy.Poly(sympy.Symbol("t") ** 6 - sympy.Symbol("t") ** 5
                   + sympy.Symbol("t") ** 3 - sympy.Symbol("t") + 1).all_roots())
    assert all(close_angle(a, b) for a, b in zip(got, exact))
    th = sorted(math.remainder(theta(3, k, 4, l), 2 * math.pi) for k in (1, 2) for l in (1, 2, 3))
    assert all(close_angle(a, b) for a, b in zip(got, th))


def test_unit_circle_roots_repeated_factor():
    got = unit_circle_roots((t**2 - t + 1) ** 3 * (t**2 - 3 * t + 1))
    assert len(got) == 2


def test_is_colorable(trefoil, figure_eight):
    v = is_colorable(trefoil)
    assert v.colorable and v.consistent
    assert any(close_angle(a, math.pi / 3) for a in v.witness_angles)
    assert not is_colorable(figure_eight).colorable
    v = is_colorable(torus_diagram(2, 5))
    assert v.colorable and len(v.witness_angles) == 4 and v.dimensions == [2] * 4
    # roots of t^4 - t^3 + t^2 - t + 1 are the primitive 10th roots of unity
    tenth = sorted(math.remainder(2 * math.pi * k / 10, 2 * math.pi) for k in (1, 3, 7, 9))
    assert all(close_angle(a, b) for a, b in zip(v.witness_angles, tenth))


def test_normalize_coloring():
    z = 2 - 1j
    c = normalize_coloring(Coloring(0.5, (z, z + 1, z + W3)))
    assert np.allclose(c.centers, [0, 1, W3])
    assert np.allclose(normalize_coloring(c).centers, c.centers)
    with pytest.raises(TrivialColoring):
        normalize_coloring(Coloring(0.5, (1j, 1j)))


def test_normalize_coloring_similarity_quotient():
    d = torus_diagram(4, 3)
    th = theta(4, 1, 3, 1)
    base = coloring_space(d, th).nontrivial()[0]
    rng = np.random.default_rng(11)
    for _ in range(5):
        a = complex(*rng.normal(size=2))
        b = complex(*rng.normal(size=2))
        moved = Coloring(th, tuple(a * z + b for z in base.centers))
        assert check_coloring(d, moved, 1e-8).ok
        diff = np.array(normalize_coloring(moved).centers) - np.array(normalize_coloring(base).centers)
        assert np.max(np.abs(diff)) < 1e-9


def _diagrams():
    yield parse_pd(TREFOIL_PD)
    yield parse_pd(FIGURE_EIGHT_PD)
    yield parse_pd(braid_closure_pd([1, 1, 1, 2, 2, 2], 3))
    yield parse_pd(braid_closure_pd([1, -2, 1, -2], 3))  # figure eight as a closed braid
    yield parse_pd(braid_closure_pd([1, 1, 1, -2, -2, -2], 3))  # square knot
    for p, q in [(2, 3), (3, 4), (2, 5), (-3, 5)]:
        yield torus_diagram(p, q)


def test_null_space_jumps_exactly_at_roots():
    rng = np.random.default_rng(2024)
    for d in _diagrams():
        delta = alexander_polynomial(d)
        thetas = list(unit_circle_roots(delta)) + list(rng.uniform(-math.pi, math.pi, 50))
        for th in thetas:
            dim = coloring_space(d, th).dimension
            vanishes = abs(eval_unit_circle(delta, th)) < 1e-7
            assert (dim >= 2) == vanishes


def test_basis_colorings_pass_check():
    for d in _diagrams():
        for th in unit_circle_roots(alexander_polynomial(d)):
            for c in coloring_space(d, th).colorings():
                assert check_coloring(d, c, 1e-8).ok


def test_mixed_angles_fail(trefoil):
    c = Coloring(math.pi / 3, (0, 1, W3))
    if not check_coloring(trefoil, c).ok:
        c = Coloring(math.pi / 3, (1, 0, W3))
    for arc in range(3):
        angles = [math.pi / 3] * 3
        angles[arc] += 1e-3
        bad = Coloring(c.angle, c.centers, tuple(angles))
        assert not check_coloring(trefoil, bad).ok
