"""Randomized end-to-end consistency checks over small diagrams.

The big stratified sweep lives in the acceptance module; these are the
same kinds of facts driven through hypothesis so failures shrink to a
small seed/size pair.
"""
from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from acforge.carter import build_complex
from acforge.gauss import parse_gauss_code, seifert_cycles
from acforge.invariants import alexander, directed_alexander, omega_of
from acforge.linking import surface_seifert_pair, validate_pair
from acforge.spanning import spanning_solution
from acforge.surface import build_surface, homology_basis, surface_genus

from fixtures import assert_solution_valid, random_ac_code, random_gauss_code

seeds = st.integers(0, 2**32 - 1)


def ac_complex(seed, n):
    code = random_ac_code(random.Random(seed), n)
    return build_complex(parse_gauss_code(code))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(2, 8))
def test_random_codes_parse_and_roundtrip(seed, n):
    code = random_gauss_code(random.Random(seed), n)
    d = parse_gauss_code(code)
    assert d.n == n
    assert parse_gauss_code(d.code()) == d


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(2, 6))
def test_face_system_is_a_boundary(seed, n):
    cx = ac_complex(seed, n)
    # closed-surface Euler count fixes the genus
    assert cx.m - cx.n == 2 - 2 * cx.genus
    assert sum(cx.face_size(k) for k in range(cx.m)) == 4 * cx.n
    # every arc side is used exactly once: net coefficients are one +1
    # and one -1 per arc row
    for a in range(2 * cx.n):
        row = cx.boundary2[a]
        assert sorted(v for v in row if v) == [-1, 1]


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(2, 6))
def test_spanning_solutions_hold_water(seed, n):
    cx = ac_complex(seed, n)
    sol = spanning_solution(cx)
    assert_solution_valid(sol)
    # a different missing face must also work and stay valid
    other = (sol.missing + 1) % cx.m
    assert_solution_valid(spanning_solution(cx, missing=other))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(2, 6))
def test_surface_accounting(seed, n):
    cx = ac_complex(seed, n)
    F = build_surface(spanning_solution(cx))
    g = surface_genus(F)
    p = len(seifert_cycles(cx.diagram))
    assert F.euler == 1 - 2 * g  # one boundary circle
    assert len(F.boundary) == 2 * cx.n
    assert len(homology_basis(F)) == 2 * g
    assert (cx.n - p + 1) % 2 == 0
    assert Fraction(cx.n - p + 1, 2) <= g


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(2, 6))
def test_pairs_are_valid_and_normalized(seed, n):
    cx = ac_complex(seed, n)
    F = build_surface(spanning_solution(cx))
    pair, basis = surface_seifert_pair(F)
    validate_pair(pair.vplus, pair.vminus)  # same symmetrization, det 1
    assert pair.rank == len(basis)
    alex = alexander(pair)
    assert alex(Fraction(1)) == 1
    # the two directed polynomials agree with the symmetric one at 1
    assert directed_alexander(pair, 1)(Fraction(1)) == \
        directed_alexander(pair, -1)(Fraction(1))


@settings(max_examples=15, deadline=None)
@given(seeds, st.integers(2, 5))
def test_missing_face_does_not_move_alexander(seed, n):
    cx = ac_complex(seed, n)
    polys = []
    for missing in (None, 0, cx.m - 1):
        sol = spanning_solution(cx, missing=missing)
        pair, _ = surface_seifert_pair(build_surface(sol))
        polys.append(alexander(pair))
    assert polys[1].equals_up_to_units_and_inversion(polys[0])
    assert polys[2].equals_up_to_units_and_inversion(polys[0])


@settings(max_examples=15, deadline=None)
@given(seeds, st.integers(2, 5), seeds)
def test_face_flips_do_not_move_alexander(seed, n, flip_seed):
    cx = ac_complex(seed, n)
    base = alexander(surface_seifert_pair(
        build_surface(spanning_solution(cx)))[0])
    rng = random.Random(flip_seed)
    flips = [k for k in range(cx.m) if rng.random() < 0.5]
    sol = spanning_solution(cx, face_flips=flips)
    flipped = alexander(surface_seifert_pair(build_surface(sol))[0])
    assert flipped.equals_up_to_units_and_inversion(base)


@settings(max_examples=25, deadline=None)
@given(seeds, st.integers(2, 6), st.fractions(max_denominator=6))
def test_signature_degenerates_exactly_on_nabla_zeros(seed, n, u):
    cx = ac_complex(seed, n)
    pair, _ = surface_seifert_pair(build_surface(spanning_solution(cx)))
    from acforge.invariants import directed_signature

    for side in (1, -1):
        w = omega_of(u if u else None)
        sig, nondeg = directed_signature(pair, side, u if u else None)
        assert nondeg == bool(directed_alexander(pair, side)(w))
        if pair.rank == 0:
            assert sig == 0 and nondeg
