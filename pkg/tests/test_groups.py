"""Group layer: composition laws, inverses, actions, and the covering."""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobigroup.groups import (
    CoveringElement,
    JacobiElement,
    Su11Element,
    covering_compose,
    covering_identity,
    covering_inverse,
    jacobi_compose,
    jacobi_identity,
    jacobi_inverse,
    principal_lift,
    su11_act_disk,
    su11_act_translation,
    su11_compose,
    su11_identity,
    su11_inverse,
)

# strategies: elements built from disk coordinates are unit-defect-free
disk_small = st.complex_numbers(max_magnitude=0.8, allow_infinity=False, allow_nan=False)
angles = st.floats(min_value=-3.1, max_value=3.1)


def _elem(omega: float, gamma: complex) -> Su11Element:
    return CoveringElement(omega, gamma).project()


def test_su11_rejects_non_unit():
    with pytest.raises(ValueError):
        Su11Element(1.0, 1.0)


def test_su11_square_example():
    g = Su11Element(math.sqrt(2), 1.0)
    gg = su11_compose(g, g)
    assert gg.a == pytest.approx(3.0)
    assert gg.b == pytest.approx(2.0 * math.sqrt(2))


def test_su11_identity_neutral():
    g = _elem(0.7, 0.3 - 0.2j)
    for h in (su11_compose(g, su11_identity()), su11_compose(su11_identity(), g)):
        assert h.a == pytest.approx(g.a)
        assert h.b == pytest.approx(g.b)


def test_act_disk_example():
    g = Su11Element(math.sqrt(2), 1.0)
    assert su11_act_disk(g, 0.0) == pytest.approx(1 / math.sqrt(2))


def test_act_disk_rejects_boundary():
    with pytest.raises(ValueError):
        su11_act_disk(su11_identity(), 1.0)


@settings(max_examples=60)
@given(angles, disk_small, angles, disk_small)
def test_su11_inverse_and_disk_action_consistent(o1, g1, o2, g2):
    a, b = _elem(o1, g1), _elem(o2, g2)
    ab = su11_compose(a, b)
    back = su11_compose(ab, su11_inverse(ab))
    assert abs(back.a - 1) < 1e-12 and abs(back.b) < 1e-12
    # disk action is a left action: (ab).w = a.(b.w)
    w = 0.3 - 0.4j
    assert su11_act_disk(ab, w) == pytest.approx(
        su11_act_disk(a, su11_act_disk(b, w)), abs=1e-12
    )
    # translation action likewise
    al = 0.9 + 0.2j
    assert su11_act_translation(ab, al) == pytest.approx(
        su11_act_translation(a, su11_act_translation(b, al)), abs=1e-11
    )


@settings(max_examples=60)
@given(*(angles, disk_small) * 3, st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2))
def test_jacobi_associative(o1, g1, o2, g2, o3, g3, t1, t2, t3):
    hs = [
        JacobiElement(_elem(o, g), complex(t, -0.5 * t), t)
        for (o, g, t) in ((o1, g1, t1), (o2, g2, t2), (o3, g3, t3))
    ]
    a, b, c = hs
    left = jacobi_compose(jacobi_compose(a, b), c)
    right = jacobi_compose(a, jacobi_compose(b, c))
    assert abs(left.g.a - right.g.a) < 1e-12
    assert abs(left.g.b - right.g.b) < 1e-12
    assert abs(left.alpha - right.alpha) < 1e-11
    assert abs(left.t - right.t) < 1e-11


@settings(max_examples=60)
@given(angles, disk_small, st.floats(-2, 2))
def test_jacobi_inverse_roundtrip(o, g, t):
    h = JacobiElement(_elem(o, g), complex(t, 0.3), t)
    e = jacobi_compose(h, jacobi_inverse(h))
    ident = jacobi_identity()
    assert abs(e.g.a - ident.g.a) < 1e-12
    assert abs(e.g.b) < 1e-12
    assert abs(e.alpha) < 1e-11
    assert abs(e.t) < 1e-11


def test_covering_rejects_boundary_gamma():
    with pytest.raises(ValueError):
        CoveringElement(0.0, 1.0 + 0.0j)


@settings(max_examples=80)
@given(st.floats(-9, 9), disk_small, st.floats(-9, 9), disk_small)
def test_covering_compose_projects_to_su11(o1, g1, o2, g2):
    c1, c2 = CoveringElement(o1, g1), CoveringElement(o2, g2)
    c12 = covering_compose(c1, c2)
    direct = su11_compose(c1.project(), c2.project())
    assert abs(c12.project().a - direct.a) < 1e-12
    assert abs(c12.project().b - direct.b) < 1e-12
    # the winding increment stays in the principal strip
    assert abs(c12.omega - c1.omega - c2.omega) < math.pi / 2 + 1e-12


@settings(max_examples=60)
@given(st.floats(-9, 9), disk_small)
def test_covering_inverse_roundtrip(o, g):
    c = CoveringElement(o, g)
    e = covering_compose(c, covering_inverse(c))
    assert abs(e.omega) < 1e-12
    assert abs(e.gamma) < 1e-12
    e2 = covering_compose(covering_inverse(c), c)
    assert abs(e2.omega) < 1e-12
    assert abs(e2.gamma) < 1e-12


def test_covering_identity_is_neutral():
    c = CoveringElement(2.6, 0.4 - 0.1j)
    e = covering_compose(c, covering_identity())
    assert e.omega == pytest.approx(c.omega)
    assert e.gamma == pytest.approx(c.gamma)


def test_principal_lift_roundtrip():
    g = _elem(0.9, 0.25 + 0.3j)
    c = principal_lift(g)
    assert -math.pi < c.omega <= math.pi
    assert abs(c.project().a - g.a) < 1e-14
    assert abs(c.project().b - g.b) < 1e-14


def test_winding_survives_composition():
    # composing n copies of a rotation by 2pi/n returns to gamma = 0 but
    # accumulates omega = 2pi, which the matrix group cannot see
    n = 8
    step = CoveringElement(2 * math.pi / n, 0.0)
    total = covering_identity()
    for _ in range(n):
        total = covering_compose(total, step)
    assert total.omega == pytest.approx(2 * math.pi)
    assert abs(total.gamma) < 1e-15
    assert abs(total.project().a - 1.0) < 1e-13


def test_gamma_and_translation_agree():
    # translation action through the matrix equals a alpha + b conj(alpha)
    g = _elem(1.1, 0.37 - 0.21j)
    al = 0.4 + 0.9j
    assert su11_act_translation(g, al) == pytest.approx(
        g.a * al + g.b * al.conjugate()
    )
    assert g.gamma == pytest.approx(g.b / g.a)
