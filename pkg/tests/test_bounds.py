from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import acosh, mpf

import oracle as O
from hypvol.bounds import (
    CoshL1,
    QuantityId,
    RangeError,
    V_combined,
    Q,
    boundary_area_outside_disks,
    c1_from_cosh_R,
    collar_volume,
    cosh_A,
    cosh_E,
    cosh_F,
    cosh_L,
    cosh_M,
    cosh_R,
    cosh_Rpp,
    cosh_Rprime,
    d_coshR,
    d_coshR_dc,
    d_muffin,
    dQ,
    dV,
    dV_expanded,
    e_monotone_on,
    ell1_threshold,
    ell2_lower,
    families_for,
    genus2_floor,
    h_profile,
    km_volume_lower,
    muffin_volume,
)
from hypvol.interval import DomainError, Interval
from oracle import inside

window = st.floats(min_value=1.1831, max_value=1.4396)
tail = st.floats(min_value=1.2, max_value=50.0)

# frozen from the 200-bit oracle in tests/oracle.py
COSH_R_1215 = mpf("1.823617666987473887612367")
A_1215 = mpf("0.644792851676191779087486")
COSH_RPP = mpf("1.461902200081543626116377")
THRESHOLD = mpf("1.439692620785908384054109")
V_1439 = mpf("7.100583161048285077288449")
Q_1439 = mpf("-0.4889280932475512271018665")


def pt(x) -> Interval:
    return Interval.point(x)


def test_frozen_values():
    assert inside(cosh_R(Interval.from_decimal("1.215")), COSH_R_1215) or abs(
        cosh_R(Interval.from_decimal("1.215")).lo - float(COSH_R_1215)
    ) < 1e-15
    assert abs(float(acosh(O.cosh_A(mpf("1.215")))) - float(A_1215)) < 1e-15
    assert inside(cosh_Rpp(), COSH_RPP)
    assert inside(ell1_threshold(), THRESHOLD)
    c = Interval.from_decimal("1.439")
    assert abs(V_combined(c).mid - float(V_1439)) < 1e-12
    assert abs(Q(c).mid - float(Q_1439)) < 1e-12


def test_genus2_floor_and_cosh_l1():
    fl = genus2_floor()
    assert inside(fl, (3 + mpf(3).sqrt()) / 4)
    with pytest.raises(ValueError):
        CoshL1(Interval.point(1.1))
    assert CoshL1.parse("1.215").c.contains(Fraction("1.215"))
    CoshL1(Interval.point(1.1), unchecked=True)


@settings(max_examples=300)
@given(window)
def test_quantities_enclose_oracle(c):
    m = mpf(c)
    C = pt(c)
    assert inside(cosh_R(C), O.cosh_R(m))
    assert inside(cosh_Rprime(cosh_R(C)), O.cosh_Rprime(O.cosh_R(m)))
    assert inside(cosh_E(C), O.cosh_E(m))
    assert inside(cosh_F(C), O.cosh_F(m))
    assert inside(cosh_L(C), O.cosh_L(m))
    assert inside(cosh_M(C), O.cosh_M(m))
    assert inside(cosh_A(C), O.cosh_A(m))
    assert inside(muffin_volume(C), O.muffin(m))
    assert inside(boundary_area_outside_disks(C), O.area(m))
    fams = families_for(C)
    assert inside(km_volume_lower(C)[0], O.km_volume(m, fams))


@settings(max_examples=200)
@given(window, window)
def test_natural_extension_encloses_range(a, b):
    a, b = sorted((a, b))
    box = Interval(a, b)
    vol, _ = km_volume_lower(box)
    for x in (a, (a + b) / 2, b):
        assert inside(vol, O.km_volume(mpf(x), families_for(box)))


@settings(max_examples=200)
@given(st.floats(min_value=1.5, max_value=5.0))
def test_c1_from_cosh_R_inverts(r):
    back = cosh_R(c1_from_cosh_R(pt(r)))
    assert back.contains(r)


def test_e_monotone_boundary_exact():
    # cosh R = 3/2 exactly at c = 7/5
    assert cosh_R(Interval.from_fraction(Fraction(7, 5))).contains(1.5)
    lo = genus2_floor().lo
    assert e_monotone_on(Interval(lo, Interval.from_fraction(Fraction(7, 5)).lo))
    assert not e_monotone_on(Interval(lo, 1.41))


def test_E_decreasing_below_threshold():
    xs = [1.19 + 0.01 * k for k in range(21)]
    vals = [O.cosh_E(mpf(x)) for x in xs]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_lm_range_error():
    with pytest.raises(RangeError):
        cosh_L(pt(1.44))
    with pytest.raises(RangeError):
        cosh_M(pt(1.5))
    assert families_for(pt(1.3)) == ("EF", "LM")
    assert families_for(pt(1.44)) == ("EF",)


def test_h_profile_labels():
    p1 = h_profile(Interval.from_decimal("1.215", "1.220"), families=("EF",))
    assert p1.active == frozenset({QuantityId.E})
    # pointwise E < F throughout the window
    assert h_profile(Interval.from_decimal("1.300"), families=("EF",)).active == frozenset({QuantityId.E})
    p3 = h_profile(Interval.from_decimal("1.400"), families=("LM",))
    assert QuantityId.M in p3.active


def test_ell2_lower_floor():
    c = pt(1.3)
    assert ell2_lower(c).lo >= c.lo


def test_collar_rejects_negative():
    with pytest.raises(DomainError):
        collar_volume(Interval(-1.0, 1.0), Interval(0.5, 0.5))
    v = collar_volume(pt(2.0), pt(0.5))
    assert inside(v, O.collar(mpf(2), mpf(0.5)))


# derivatives against finite differences of the oracle (in l1 = arccosh c)


@pytest.mark.parametrize("c", [1.3, 1.439, 2.0, 7.5, 40.0])
def test_derivatives_vs_finite_difference(c):
    import mpmath

    l1 = mpmath.acosh(mpf(c))
    in_l = lambda f: mpmath.diff(lambda t: f(mpmath.cosh(t)), l1)  # noqa: E731
    C = pt(c)
    assert abs(d_coshR(C).mid - float(in_l(O.cosh_R))) < 1e-9
    assert abs(dQ(C).mid - float(in_l(O.Q))) < 1e-9
    assert abs(dV(C).mid - float(in_l(O.V))) < 1e-8
    assert abs(dV_expanded(C).mid - float(in_l(O.V))) < 1e-8
    assert abs(d_muffin(C).mid - float(in_l(O.muffin))) < 1e-9
    assert abs(d_coshR_dc(C).mid - float(mpmath.diff(O.cosh_R, mpf(c)))) < 1e-9


@settings(max_examples=200)
@given(tail)
def test_tail_signs(c):
    C = pt(c)
    assert dQ(C).hi < 0 and d_coshR(C).hi < 0 and d_muffin(C).hi < 0
    if c >= 1.439:
        assert dV(C).lo > 0
        assert inside(V_combined(C), O.V(mpf(c)))
