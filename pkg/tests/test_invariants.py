from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from acforge.carter import build_complex
from acforge.errors import DegreeTooLarge, OmegaEqualsOne
from acforge.gauss import parse_gauss_code
from acforge.invariants import (
    DEFAULT_SIGNATURE_SAMPLES,
    GaussianRational,
    alexander,
    directed_alexander,
    directed_signature,
    fox_milnor,
    genus_report,
    omega_of,
    sample_points,
    signature_profile,
)
from acforge.laurent import LaurentPoly
from acforge.linking import SeifertPair, surface_seifert_pair
from acforge.spanning import spanning_solution
from acforge.surface import build_surface

from fixtures import (
    ALEX_499,
    ALEX_52025,
    ALEX_687548,
    ALEX_FIGURE8,
    ALEX_TREFOIL,
    CODE_499,
    CODE_687548,
    CODE_TREFOIL,
    FOX_MILNOR_FACTOR_499,
    GENUS_REPORT_499,
    GENUS_REPORT_687548,
    NABLA_MINUS_499,
    NABLA_MINUS_687548,
    NABLA_PLUS_499,
    NABLA_PLUS_52025,
    NABLA_PLUS_687548,
    PAIR_499,
    PAIR_52025,
    PAIR_687548,
    TREFOIL_SIGNATURE_AT_MINUS_ONE,
)


def pair_of(d):
    return SeifertPair(
        tuple(tuple(r) for r in d["vplus"]),
        tuple(tuple(r) for r in d["vminus"]),
    )


def P(d):
    return LaurentPoly(d)


# --- Gaussian rationals -------------------------------------------------------


def test_gaussian_rational_field_ops():
    i = GaussianRational.of(0, 1)
    assert i * i == GaussianRational.of(-1)
    a = GaussianRational.of(Fraction(1, 2), Fraction(-3, 4))
    assert a - a == GaussianRational.of(0) and not (a - a)
    assert (a / a) == GaussianRational.of(1)
    assert a * a.conj() == GaussianRational.of(
        Fraction(1, 4) + Fraction(9, 16))
    assert (1 / i) == -i
    assert i ** -3 == i
    with pytest.raises(ZeroDivisionError):
        a / GaussianRational.of(0)


@given(st.fractions(max_denominator=20).filter(bool))
def test_omega_is_on_the_unit_circle(u):
    w = omega_of(u)
    assert w.re * w.re + w.im * w.im == 1
    assert (1 / w) == w.conj()


def test_omega_special_points():
    assert omega_of(None) == GaussianRational.of(-1)
    assert omega_of(1) == GaussianRational.of(0, 1)
    with pytest.raises(OmegaEqualsOne):
        omega_of(0)


# --- determinant polynomials on the reference pairs ---------------------------


@pytest.mark.parametrize(
    "pair_dict,alex,nplus,nminus",
    [
        (PAIR_499, ALEX_499, NABLA_PLUS_499, NABLA_MINUS_499),
        (PAIR_52025, ALEX_52025, NABLA_PLUS_52025, NABLA_PLUS_52025),
        (PAIR_687548, ALEX_687548, NABLA_PLUS_687548, NABLA_MINUS_687548),
    ],
)
def test_reference_pair_polynomials(pair_dict, alex, nplus, nminus):
    pair = pair_of(pair_dict)
    assert alexander(pair) == P(alex)
    assert directed_alexander(pair, 1) == P(nplus)
    assert directed_alexander(pair, -1) == P(nminus)


def test_alexander_at_one_is_one():
    for d in (PAIR_499, PAIR_52025, PAIR_687548):
        assert alexander(pair_of(d))(Fraction(1)) == 1


def test_empty_pair_gives_unit_polynomials():
    pair = SeifertPair((), ())
    assert alexander(pair) == 1
    assert directed_alexander(pair, 1) == 1


def test_classical_trefoil_polynomial():
    cx = build_complex(parse_gauss_code(CODE_TREFOIL))
    F = build_surface(spanning_solution(cx))
    pair, _ = surface_seifert_pair(F)
    assert alexander(pair) == P(ALEX_TREFOIL)
    # both directed polynomials collapse to the classical one
    assert directed_alexander(pair, 1) == P(ALEX_TREFOIL)
    assert directed_alexander(pair, -1) == P(ALEX_TREFOIL)
    assert P(ALEX_FIGURE8)(Fraction(1)) == 1  # fixture sanity


# --- signatures -----------------------------------------------------------------


def test_sample_points_extend_deterministically():
    pts16 = sample_points(DEFAULT_SIGNATURE_SAMPLES)
    assert len(pts16) == 16
    assert pts16[0] == 1 and pts16[1] == -1
    assert Fraction(3, 2) not in pts16
    pts18 = sample_points(18)
    assert pts18[:16] == pts16 and pts18[16:] == [Fraction(3, 2),
                                                  Fraction(-3, 2)]
    pts20 = sample_points(20)
    assert pts20[18:] == [Fraction(3, 4), Fraction(-3, 4)]
    with pytest.raises(ValueError):
        sample_points(0)


def test_signature_edge_inputs():
    pair = pair_of(PAIR_499)
    assert directed_signature(pair, 1, None) == (0, True)
    assert directed_signature(pair, 1, Fraction(1, 2)) == (0, True)
    with pytest.raises(OmegaEqualsOne):
        directed_signature(pair, 1, 0)
    with pytest.raises(ValueError):
        directed_signature(pair, 2, 1)


def test_trefoil_signature_at_half_turn():
    cx = build_complex(parse_gauss_code(CODE_TREFOIL))
    F = build_surface(spanning_solution(cx))
    pair, _ = surface_seifert_pair(F)
    for side in (1, -1):
        sig, nondeg = directed_signature(pair, side, None)
        assert nondeg and sig == TREFOIL_SIGNATURE_AT_MINUS_ONE


def test_profiles_of_reference_pairs_vanish():
    for d in (PAIR_499, PAIR_52025, PAIR_687548):
        pair = pair_of(d)
        for side in (1, -1):
            prof = signature_profile(pair, side)
            assert len(prof.samples) == 16
            assert prof.all_zero_where_defined()
            assert prof.max_abs() == 0
            assert all(s.nondegenerate for s in prof.samples)


def test_trefoil_profile_sees_the_jump():
    cx = build_complex(parse_gauss_code(CODE_TREFOIL))
    F = build_surface(spanning_solution(cx))
    pair, _ = surface_seifert_pair(F)
    prof = signature_profile(pair, 1)
    assert prof.max_abs() == 2
    assert not prof.all_zero_where_defined()


# --- Fox-Milnor -----------------------------------------------------------------


def test_fox_milnor_positive_cases():
    f = fox_milnor(P(NABLA_PLUS_499))
    assert f is not None
    assert f.equals_up_to_units(P(FOX_MILNOR_FACTOR_499))
    assert f * f.invert_t() == P(NABLA_PLUS_499)

    g = fox_milnor(P(NABLA_MINUS_499))  # constant 4 = 2 * 2
    assert g is not None and g * g.invert_t() == P(NABLA_MINUS_499)

    assert fox_milnor(P({0: 1})) == 1
    assert fox_milnor(LaurentPoly()) == LaurentPoly()

    # a manufactured square with a wide factor
    f = P({2: 1, 1: -3, 0: 1, -1: 2})
    q = f * f.invert_t()
    got = fox_milnor(q)
    assert got is not None and got * got.invert_t() == q


def test_fox_milnor_negative_cases():
    assert fox_milnor(P(ALEX_TREFOIL)) is None
    assert fox_milnor(P(ALEX_FIGURE8)) is None
    assert fox_milnor(P(NABLA_PLUS_687548)) is None
    assert fox_milnor(P(NABLA_MINUS_687548)) is None
    # odd width can never split as f(t) f(1/t)
    assert fox_milnor(P({1: 1, 0: 1})) is None
    # not centered: minimum and maximum degrees must be opposite
    assert fox_milnor(P({2: 1, 0: 1})) is None
    # negative at +1 (here: value -1) fails the square test
    assert fox_milnor(P({1: -1, 0: 1, -1: -1})) is None


def test_fox_milnor_degree_guard():
    f = P({7: 1, 0: -2})
    q = f * f.invert_t()
    with pytest.raises(DegreeTooLarge):
        fox_milnor(q)


# --- genus report ----------------------------------------------------------------


def report_for(code):
    cx = build_complex(parse_gauss_code(code))
    F = build_surface(spanning_solution(cx))
    pair, _ = surface_seifert_pair(F)
    profiles = {s: signature_profile(pair, s) for s in (1, -1)}
    return genus_report(cx.diagram, F, pair, profiles)


def test_genus_report_499():
    rep = report_for(CODE_499)
    assert str(rep.width_lower_bound) == GENUS_REPORT_499["widthLowerBound"]
    assert rep.surface_genus == GENUS_REPORT_499["surfaceGenus"]
    assert str(rep.canonical_slice_genus) == \
        GENUS_REPORT_499["canonicalSliceGenus"]
    assert rep.slice_signature_bound == 0
    assert rep.fox_milnor_obstructed == {1: False, -1: False}
    assert not rep.slice_obstructed


def test_genus_report_687548():
    rep = report_for(CODE_687548)
    assert str(rep.width_lower_bound) == \
        GENUS_REPORT_687548["widthLowerBound"]
    assert rep.surface_genus == GENUS_REPORT_687548["surfaceGenus"]
    assert str(rep.canonical_slice_genus) == \
        GENUS_REPORT_687548["canonicalSliceGenus"]
    assert rep.fox_milnor_obstructed == {1: True, -1: True}
    assert rep.slice_obstructed


def test_genus_report_trefoil_is_obstructed():
    rep = report_for(CODE_TREFOIL)
    assert rep.slice_signature_bound == 1
    assert rep.fox_milnor_obstructed == {1: True, -1: True}
    assert rep.slice_obstructed
