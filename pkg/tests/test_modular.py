import itertools

import pytest
from hypothesis import given, settings, strategies as st

from foxcol.coloring import coloring_matrix
from foxcol.diagram import torus_diagram
from foxcol.modular import (BudgetExceeded, DomainError, IntegerMatrix, SnfOverflowError,
                            count_solutions_mod, det, enumerate_solutions_mod, gcd, is_prime,
                            least_common_prime_divisor, matmul, smith_normal_form)


@pytest.mark.parametrize("l, m, want", [(4, 6, 2), (5, 5, 5), (9, 8, 1)])
def test_gcd(l, m, want):
    assert gcd(l, m) == want


@pytest.mark.parametrize("l, m", [(0, 3), (3, 0), (-2, 4)])
def test_gcd_rejects_nonpositive(l, m):
    with pytest.raises(DomainError):
        gcd(l, m)


@pytest.mark.parametrize("l, m, want", [(3, 5, 1), (6, 4, 2), (15, 10, 5), (45, 75, 3)])
def test_least_common_prime_divisor(l, m, want):
    assert least_common_prime_divisor(l, m) == want


def test_least_common_prime_divisor_domain():
    with pytest.raises(DomainError):
        least_common_prime_divisor(0, 7)


@given(st.integers(1, 500), st.integers(1, 500))
def test_gcd_and_lcpd_symmetric(l, m):
    assert gcd(l, m) == gcd(m, l)
    assert least_common_prime_divisor(l, m) == least_common_prime_divisor(m, l)


@given(st.integers(1, 400), st.integers(1, 400))
def test_lcpd_is_smallest_common_prime(l, m):
    # trial-division oracle over all primes
    common = [p for p in range(2, min(l, m) + 1) if is_prime(p) and l % p == 0 and m % p == 0]
    assert least_common_prime_divisor(l, m) == (common[0] if common else 1)


def _check_snf(m: IntegerMatrix):
    snf = smith_normal_form(m)
    prod = matmul(matmul([list(r) for r in snf.u], m.to_rows()), [list(r) for r in snf.v])
    for i, row in enumerate(prod):
        for j, x in enumerate(row):
            assert x == (snf.d[i] if i == j else 0)
    nz = snf.d[:snf.rank]
    assert all(x > 0 for x in nz)
    assert all(x == 0 for x in snf.d[snf.rank:])
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    assert abs(det([list(r) for r in snf.u])) == 1
    assert abs(det([list(r) for r in snf.v])) == 1
    return snf


def test_snf_diagonal_example():
    snf = _check_snf(IntegerMatrix.from_rows([[2, 0], [0, 3]]))
    assert snf.d == (1, 6)


def test_snf_zero_and_identity():
    z = _check_snf(IntegerMatrix.zeros(2, 2))
    assert z.d == (0, 0) and z.rank == 0
    one = _check_snf(IntegerMatrix.from_rows([[1]]))
    assert one.d == (1,) and one.rank == 1


def test_snf_deterministic():
    m = IntegerMatrix.from_rows([[4, -6, 2], [8, 3, -1], [0, 5, 7]])
    assert smith_normal_form(m) == smith_normal_form(m)


matrices = st.integers(1, 6).flatmap(lambda r: st.integers(1, 6).flatmap(
    lambda c: st.lists(st.integers(-9, 9), min_size=r * c, max_size=r * c).map(
        lambda e: IntegerMatrix(r, c, tuple(e)))))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_invariants_random(m):
    _check_snf(m)


def test_snf_overflow_guard():
    m = IntegerMatrix.from_rows([[2 ** 40 + 1, 3], [5, 2 ** 40 + 7]])
    with pytest.raises(SnfOverflowError):
        smith_normal_form(m, max_bits=20)


def test_matrix_shape_checked():
    with pytest.raises(DomainError):
        IntegerMatrix(2, 2, (1, 2, 3))


@pytest.mark.parametrize("rows, r, want", [([[3]], 3, 3), ([[1]], 5, 1)])
def test_count_small(rows, r, want):
    assert count_solutions_mod(IntegerMatrix.from_rows(rows), r) == want


def test_count_trefoil_matrix():
    assert count_solutions_mod(coloring_matrix(torus_diagram(3)), 3) == 9


def _brute(m: IntegerMatrix, r: int):
    rows = m.to_rows()
    return [x for x in itertools.product(range(r), repeat=m.cols)
            if all(sum(a * b for a, b in zip(row, x)) % r == 0 for row in rows)]


small = st.integers(1, 4).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.integers(-4, 4), min_size=r * c, max_size=r * c).map(
        lambda e: IntegerMatrix(r, c, tuple(e)))))


@settings(max_examples=120, deadline=None)
@given(small, st.integers(2, 5))
def test_count_matches_brute_force(m, r):
    assert count_solutions_mod(m, r) == len(_brute(m, r))


@settings(max_examples=120, deadline=None)
@given(small, st.integers(2, 5))
def test_enumeration_matches_brute_force(m, r):
    got = list(enumerate_solutions_mod(m, r))
    assert len(got) == len(set(got)) == count_solutions_mod(m, r)
    assert set(got) == set(_brute(m, r))


def test_enumerate_examples():
    assert list(enumerate_solutions_mod(IntegerMatrix.from_rows([[1]]), 4)) == [(0,)]
    tref = list(enumerate_solutions_mod(coloring_matrix(torus_diagram(3)), 3))
    assert len(tref) == 9
    assert sum(1 for x in tref if len(set(x)) == 1) == 3
    assert len(list(enumerate_solutions_mod(coloring_matrix(torus_diagram(4)), 6))) == 12


def test_enumerate_order_is_stable():
    m = coloring_matrix(torus_diagram(6))
    assert list(enumerate_solutions_mod(m, 6)) == list(enumerate_solutions_mod(m, 6))


def test_budget_exceeded_carries_count():
    m = IntegerMatrix.zeros(1, 4)
    with pytest.raises(BudgetExceeded) as info:
        enumerate_solutions_mod(m, 10, cap=100)
    assert info.value.count == 10 ** 4


def test_modulus_checked():
    with pytest.raises(DomainError):
        count_solutions_mod(IntegerMatrix.from_rows([[1]]), 1)
