import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import weyl_orbit
from wonderful_curves.curves import (
    AddCurve,
    MultCurve,
    OrbitLabel,
    additive_degree,
    additive_infinity_orbit,
    b_stable_curves,
    coroot_cocharacter,
    curve_report,
    mult_degree,
    mult_is_smooth,
    mult_limit_orbits,
)
from wonderful_curves.errors import EmptyProduct, NoShortRoot, NotDominant, NotIndivisible, RankMismatch
from wonderful_curves.root_system import Cocharacter, Weight, _gram, all_types, build, root_to_weight


def orbit_spread(datum, lam, eta):
    """max - min of <mu, eta> over the W-orbit of lam, via sympy's inverse Cartan matrix."""
    cinv = sympy.Matrix(datum.cartan).inv()
    c = sympy.Matrix(list(eta))
    vals = [(sympy.Matrix([list(mu)]) * cinv * c)[0] for mu in weyl_orbit(_gram(datum.type), tuple(lam))]
    return max(vals) - min(vals)


@pytest.mark.parametrize("l", range(1, 9))
def test_mult_degree_on_theta_coroot_type_a(l):
    d = build(f"A{l}")
    th = coroot_cocharacter(d, "theta")
    for i in range(1, l + 1):
        lam = d.fundamental_weight(i)
        assert mult_degree(d, lam, th) == 2 * additive_degree(d, lam, "theta")


@pytest.mark.parametrize("l", range(1, 9))
def test_mult_degree_first_coweight_type_a(l):
    d = build(f"A{l}")
    assert mult_degree(d, d.fundamental_weight(1), Cocharacter.basis(l, 1)) == 1


def test_mult_degree_zero_weight():
    for t in all_types(8):
        d = build(t)
        assert mult_degree(d, Weight.zero(d.rank), Cocharacter((1,) * d.rank)) == 0


def test_mult_degree_rejects_non_dominant():
    with pytest.raises(NotDominant):
        mult_degree(build("A2"), Weight([1, 0]), Cocharacter([1, -1]))
    with pytest.raises(NotDominant):
        mult_limit_orbits(build("A2"), Cocharacter([-1, 0]))


@pytest.mark.parametrize("name", ["A2", "A3", "B3", "C3", "D4", "G2", "F4"])
def test_mult_degree_matches_orbit_spread(name):
    d = build(name)
    n = d.rank
    for lam in [(1,) * n, tuple(range(n)), tuple(2 if k == 0 else 0 for k in range(n))]:
        for eta in [(1,) * n, tuple(int(k == n - 1) for k in range(n)), tuple(k % 2 for k in range(n))]:
            if not any(eta):
                continue
            assert mult_degree(d, lam, eta) == orbit_spread(d, lam, eta)


def test_a2_mult_report():
    d = build("A2")
    rep = curve_report(d, MultCurve([1, 0]))
    assert rep.degrees == {Weight([1, 0]): 1, Weight([0, 1]): 1}
    assert rep.orbit_at_zero == OrbitLabel(2, [1])
    assert rep.orbit_at_infinity == OrbitLabel(2, [2])
    assert rep.smooth
    # kappa = (3, 3), kappa - w0 kappa = (6, 6), paired with varpi_1^v
    assert rep.anticanonical_degree == 6


def test_limit_orbits_examples():
    a3 = build("A3")
    assert mult_limit_orbits(a3, [1, 0, 1]) == (OrbitLabel(3, [1, 3]), OrbitLabel(3, [1, 3]))
    assert mult_limit_orbits(a3, [1, 0, 0]) == (OrbitLabel(3, [1]), OrbitLabel(3, [3]))
    assert mult_limit_orbits(a3, [1, 1, 1]) == (OrbitLabel(3, [1, 2, 3]),) * 2
    e8 = build("E8")
    assert mult_limit_orbits(e8, Cocharacter.basis(8, 1)) == (OrbitLabel(8, [1]),) * 2
    e6 = build("E6")
    assert mult_limit_orbits(e6, Cocharacter.basis(6, 3)) == (OrbitLabel(6, [3]), OrbitLabel(6, [5]))


def test_smoothness_examples():
    b3 = build("B3")
    half = Cocharacter(c // 2 for c in coroot_cocharacter(b3, "theta_short"))
    assert half == Cocharacter([1, 0, 0])
    assert mult_is_smooth(b3, half)
    assert mult_is_smooth(build("A2"), [1, 1])
    d4 = build("D4")
    assert mult_is_smooth(d4, [2, 1, 0, 0])
    assert not mult_is_smooth(d4, [2, 0, 0, 3])


def test_smoothness_rejects_bad_input():
    with pytest.raises(NotIndivisible):
        mult_is_smooth(build("A3"), [2, 0, 2])
    with pytest.raises(NotDominant):
        mult_is_smooth(build("A3"), [1, -1, 0])
    with pytest.raises(NotIndivisible):
        MultCurve([0, 0])


def test_additive_degree_examples():
    for l in range(2, 9):
        d = build(f"A{l}")
        degs = [additive_degree(d, d.fundamental_weight(i), "theta") for i in range(1, l + 1)]
        assert degs == [1] * l
        # boundary divisors D_i = L(alpha_i)
        div = [additive_degree(d, d.cartan[i], "theta") for i in range(l)]
        assert div == [1] + [0] * (l - 2) + [1]
    b3 = build("B3")
    assert additive_degree(b3, root_to_weight(b3, b3.simple_root(1)), "theta_short") == 2
    assert additive_degree(build("E7"), Weight.zero(7), "theta") == 0


def test_no_short_root():
    with pytest.raises(NoShortRoot):
        additive_degree(build("E6"), Weight.zero(6), "theta_short")
    with pytest.raises(NoShortRoot):
        additive_infinity_orbit(build("A3"), "theta_short")


def test_infinity_orbits():
    for l in range(2, 9):
        assert additive_infinity_orbit(build(f"A{l}")) == OrbitLabel(l, [1, l])
    assert additive_infinity_orbit(build("F4"), "theta_short") == OrbitLabel(4, [4])
    assert additive_infinity_orbit(build("G2"), "theta_short") == OrbitLabel(2, [1])
    # G2 in Bourbaki numbering: theta = varpi_2, so i0 = 2
    assert additive_infinity_orbit(build("G2"), "theta") == OrbitLabel(2, [2])
    for l in range(3, 9):
        assert additive_infinity_orbit(build(f"B{l}"), "theta_short") == OrbitLabel(l, [1])
        assert additive_infinity_orbit(build(f"C{l}"), "theta_short") == OrbitLabel(l, [2])


def test_b_stable_curves():
    assert b_stable_curves(["A2"]) == [AddCurve("theta", 0)]
    curves = b_stable_curves(["A2", "G2"])
    assert [c.factor for c in curves] == [0, 1]
    assert all(c.which == "theta" for c in curves)
    with pytest.raises(EmptyProduct):
        b_stable_curves([])


def test_additive_reports():
    a2 = build("A2")
    rep = curve_report(a2, AddCurve("theta"))
    assert rep.anticanonical_degree == 6
    assert rep.orbit_at_zero.is_open
    assert rep.orbit_at_infinity == OrbitLabel(2, [1, 2])
    g2 = build("G2")
    rep = curve_report(g2, AddCurve("theta"))
    assert rep.anticanonical_degree == 7
    assert rep.indivisible
    b3 = build("B3")
    rep = curve_report(b3, AddCurve("theta_short"))
    assert not rep.indivisible
    assert rep.divisor_degrees == (2, 0, 0)


def test_orbit_label():
    lab = OrbitLabel(4, [3, 1, 3])
    assert lab.subset == (1, 3) and str(lab) == "{1,3}"
    assert OrbitLabel(3).is_open and OrbitLabel(3, [1, 2, 3]).is_closed
    with pytest.raises(RankMismatch):
        OrbitLabel(2, [3])


@pytest.mark.parametrize("name", ["A6", "B5", "C4", "D6", "E6", "E7", "E8", "F4", "G2"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_degree_consistency_property(name, data):
    d = build(name)
    lam = Weight(data.draw(st.lists(st.integers(0, 50), min_size=d.rank, max_size=d.rank)))
    th = coroot_cocharacter(d, "theta")
    assert mult_degree(d, lam, th) == 2 * additive_degree(d, lam, "theta")


@pytest.mark.parametrize("name", ["A4", "B3", "D5", "E6", "G2"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_mult_degree_positive_for_nonzero_dominant(name, data):
    d = build(name)
    lam = Weight(data.draw(st.lists(st.integers(0, 5), min_size=d.rank, max_size=d.rank)))
    eta = Cocharacter(data.draw(st.lists(st.integers(0, 5), min_size=d.rank, max_size=d.rank)))
    deg = mult_degree(d, lam, eta)
    assert deg >= 0
    assert (deg == 0) == (not any(lam) or not any(eta))
