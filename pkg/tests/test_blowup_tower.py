import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hncones.blowup_tower import (
    TowerElement,
    TowerSpec,
    cone_map_D,
    cone_map_U,
    exceptional,
    gamma,
    identity_checks,
    nef_pullback,
    one,
    pull_B,
    pull_eta,
    push_B,
    push_eta,
    tower_degree,
)
from hncones.chow_ring import ChowElement, class_of_PQ1

from conftest import chow_elements, hn, small_rationals


@st.composite
def tower_specs(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    r1 = draw(st.integers(1, n - 1))
    return TowerSpec(n, draw(small_rationals), r1, draw(small_rationals))


def homogeneous(draw, spec, codim):
    coeffs = {m: draw(small_rationals) for m in spec.basis(codim)}
    return ChowElement(spec, coeffs)


def test_spec_from_hn(three_lines):
    t = TowerSpec.from_hn(three_lines)
    assert (t.n, t.D, t.r1, t.d1) == (3, 2, 1, -1)
    assert (t.y_spec.n, t.y_spec.D) == (2, 3)


def test_semistable_has_no_tower():
    with pytest.raises(ValueError):
        TowerSpec.from_hn(hn((3, 1)))


def test_pull_eta_examples(three_lines):
    t = TowerSpec.from_hn(three_lines)
    ys = t.y_spec
    assert pull_eta(t, ys.one()) == one(t)
    assert pull_eta(t, ys.xi()).coeff(0) == ys.xi()
    x, y = ys.xi() + ys.f() * 2, ys.xi() - ys.f()
    assert pull_eta(t, x * y) == pull_eta(t, x) * pull_eta(t, y)


def test_push_eta_examples():
    t = TowerSpec(5, 3, 3, -2)
    assert push_eta(gamma(t, 3)) == t.y_spec.one()
    for a in range(3):
        assert push_eta(gamma(t, a)) == t.y_spec.zero()
    assert push_eta(nef_pullback(t)) == t.y_spec.one()


def test_pull_B_examples(three_lines):
    t = TowerSpec.from_hn(three_lines)
    xs = t.x_spec
    assert pull_B(t, xs.xi()) == gamma(t)
    assert pull_B(t, xs.f()) == pull_eta(t, t.y_spec.f())
    assert pull_B(t, xs.xi()) ** 3 == pull_B(t, xs.point() * xs.D)


def test_exceptional_examples(three_lines):
    t = TowerSpec.from_hn(three_lines)
    E = exceptional(t)
    assert E + pull_eta(t, t.y_spec.xi()) == gamma(t)
    assert E * nef_pullback(t) == TowerElement(t)
    xs = t.x_spec
    assert E * pull_B(t, xs.xi() + xs.f()) == TowerElement(t)


def test_push_B_examples(three_lines):
    t = TowerSpec(4, 1, 1, -3)
    xs = t.x_spec
    assert push_B(pull_B(t, xs.xi() ** 2)) == xs.xi() ** 2
    E = exceptional(t)
    for j in (1, 2):
        assert not push_B(E**j)
    # Codimension of P(Q_1) is 3: B_*(E^3) = (-1)^2 [P(Q_1)].
    assert push_B(E**3) == class_of_PQ1(xs, 1, -3)


def test_cone_map_examples():
    t = TowerSpec(5, 2, 2, -1)
    xs, ys = t.x_spec, t.y_spec
    assert cone_map_U(t, ys.one(), 0) == xs.one()
    assert cone_map_U(t, ys.xi(), 1) == xs.xi()
    for i in (1, 2):
        y = ys.monomial(i) + ys.monomial(i - 1, 1, 5)
        assert cone_map_U(t, y, i) == xs.monomial(i) + xs.monomial(i - 1, 1, 5)
        assert cone_map_D(t, xs.monomial(i), i) == ys.monomial(i)
        assert cone_map_D(t, xs.monomial(i - 1, 1), i) == ys.monomial(i - 1, 1)
    with pytest.raises(ValueError):
        cone_map_U(t, ys.monomial(2, 1), 3)
    with pytest.raises(ValueError):
        cone_map_D(t, xs.xi(), 2)


@settings(max_examples=60, deadline=None)
@given(tower_specs(), st.data())
def test_pull_B_is_ring_homomorphism(t, data):
    x = data.draw(chow_elements(t.x_spec))
    y = data.draw(chow_elements(t.x_spec))
    assert pull_B(t, x * y) == pull_B(t, x) * pull_B(t, y)
    assert pull_B(t, x + y) == pull_B(t, x) + pull_B(t, y)


@settings(max_examples=60, deadline=None)
@given(tower_specs())
def test_blowup_identities(t):
    assert all(ok for _, ok in identity_checks(t))


@settings(max_examples=60, deadline=None)
@given(tower_specs(), st.data())
def test_projection_formulas(t, data):
    xs, ys = t.x_spec, t.y_spec
    x = data.draw(chow_elements(xs))
    y = data.draw(chow_elements(ys))
    w = data.draw(chow_elements(xs))
    tel = pull_B(t, w) * pull_eta(t, y) + gamma(t, data.draw(st.integers(0, t.r1)))
    assert push_eta(tel * pull_eta(t, y)) == push_eta(tel) * y
    assert push_B(tel * pull_B(t, x)) == push_B(tel) * x
    assert push_B(pull_B(t, x)) == x


@settings(max_examples=60, deadline=None)
@given(tower_specs(), st.data())
def test_push_B_is_adjoint(t, data):
    xs = t.x_spec
    tel = pull_eta(t, data.draw(chow_elements(t.y_spec))) * gamma(t, data.draw(st.integers(0, t.r1)))
    x = push_B(tel)
    for m in xs.basis():
        mono = xs.monomial(*m)
        assert (x * mono).degree() == tower_degree(tel * pull_B(t, mono))


@settings(max_examples=60, deadline=None)
@given(tower_specs(max_n=7), st.data())
def test_cone_maps_inverse_on_random_classes(t, data):
    top = t.n - t.r1 - 1
    i = data.draw(st.integers(0, top))
    y = homogeneous(data.draw, t.y_spec, i)
    x = homogeneous(data.draw, t.x_spec, i)
    assert cone_map_D(t, cone_map_U(t, y, i), i) == y
    assert cone_map_U(t, cone_map_D(t, x, i), i) == x
    # Coefficients carry over unchanged.
    assert cone_map_U(t, y, i).coeffs == y.coeffs


@settings(max_examples=40, deadline=None)
@given(tower_specs())
def test_exceptional_pushforward_vanishes_exactly_below_codim(t):
    E = exceptional(t)
    c = t.n - t.r1
    for j in range(1, c):
        assert not push_B(E**j)
    assert push_B(E**c) == class_of_PQ1(t.x_spec, t.r1, t.d1) * (-1) ** (c - 1)
