from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from acforge.intmat import (
    bareiss_det,
    identity,
    kernel_basis,
    mat_mul,
    mat_vec,
    quotient_basis,
    smith_normal_form,
    snf_rank,
    solve_integer,
    transpose,
)
from acforge.laurent import LaurentPoly


def naive_det(a):
    n = len(a)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):   # count inversions
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = 1
        for i in range(n):
            term *= a[i][perm[i]]
        total += sign * term
    return total


small_int = st.integers(min_value=-6, max_value=6)


def square(n):
    return st.lists(
        st.lists(small_int, min_size=n, max_size=n), min_size=n, max_size=n)


def test_det_edge_cases():
    assert bareiss_det([]) == 1
    assert bareiss_det([[7]]) == 7
    assert bareiss_det([[1, 2], [3, 4]]) == -2
    assert bareiss_det(identity(5)) == 1
    with pytest.raises(ValueError):
        bareiss_det([[1, 2]])


@given(st.integers(min_value=1, max_value=5).flatmap(square))
def test_det_matches_cofactor_expansion(a):
    assert bareiss_det(a) == naive_det(a)


def test_det_over_laurent_ring():
    t = LaurentPoly.t_power(1)
    one = LaurentPoly.const(1)
    # det [[t, 1], [1, t]] = t^2 - 1
    d = bareiss_det([[t, one], [one, t]])
    assert d == LaurentPoly({2: 1, 0: -1})
    # a singular symbolic matrix
    z = bareiss_det([[t, t], [t, t]])
    assert not z and isinstance(z, LaurentPoly)


def test_matrix_helpers():
    a = [[1, 2], [3, 4]]
    assert transpose(a) == [[1, 3], [2, 4]]
    assert transpose([]) == []
    assert mat_vec(a, [1, 1]) == [3, 7]
    assert mat_mul(a, identity(2)) == a
    assert mat_mul([], []) == []


@given(st.lists(st.lists(small_int, min_size=3, max_size=3),
                min_size=2, max_size=4))
def test_smith_normal_form_properties(a):
    s, u, uinv, v = smith_normal_form(a)
    m, n = len(a), 3
    assert s == mat_mul(mat_mul(u, a), v)
    assert mat_mul(u, uinv) == identity(m)
    assert mat_mul(uinv, u) == identity(m)
    assert abs(bareiss_det(u)) == 1 and abs(bareiss_det(v)) == 1
    for i in range(m):
        for j in range(n):
            if i != j:
                assert s[i][j] == 0
            else:
                assert s[i][j] >= 0
    # zero diagonal entries come after the nonzero ones
    diag = [s[i][i] for i in range(min(m, n))]
    nz = [d for d in diag if d]
    assert diag == nz + [0] * (len(diag) - len(nz))
    assert snf_rank(s) == len(nz)


@given(st.lists(st.lists(small_int, min_size=3, max_size=3),
                min_size=2, max_size=4),
       st.lists(small_int, min_size=3, max_size=3))
def test_solve_integer_on_constructed_rhs(a, x):
    b = mat_vec(a, x)
    got = solve_integer(a, b)
    assert got is not None
    assert mat_vec(a, got) == b


def test_solve_integer_detects_unsolvable():
    assert solve_integer([[2]], [1]) is None
    assert solve_integer([[1, 0], [1, 0]], [0, 1]) is None
    assert solve_integer([[0, 0]], [0]) == [0, 0]


@given(st.lists(st.lists(small_int, min_size=4, max_size=4),
                min_size=2, max_size=3))
def test_kernel_basis_spans_kernel(a):
    basis = kernel_basis(a)
    n = 4
    rank = snf_rank(smith_normal_form(a)[0])
    assert len(basis) == n - rank
    for vec in basis:
        assert mat_vec(a, vec) == [0] * len(a)
    if basis:
        # independence: the basis matrix has full column rank
        cols = transpose(basis)
        assert snf_rank(smith_normal_form(cols)[0]) == len(basis)


def test_quotient_basis():
    # Z^3 modulo the span of (1,0,0) leaves a rank-2 free quotient
    basis = quotient_basis([[1, 0, 0]], 3)
    assert len(basis) == 2
    # and together with the relation they generate Z^3
    full = [[1, 0, 0]] + basis
    assert abs(bareiss_det(full)) == 1
    assert quotient_basis([], 3) == identity(3)
    with pytest.raises(ArithmeticError):
        quotient_basis([[2, 0]], 2)  # Z/2 torsion
