import pytest
from hypothesis import given, settings, strategies as st

from spfarrell.fieldlin import (
    FpMatrix,
    FpScalar,
    divisors,
    euler_phi,
    is_prime,
    mod_pow,
    mul_order,
    nth_roots_of_unity,
    null_space_dim,
    primitive_roots_of_unity,
    rank,
)

ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def test_mod_pow_examples():
    assert mod_pow(2, 3, 7) == 1
    assert mod_pow(29, 1, 7) == 1
    for a in (0, 3, 12, -4):
        assert mod_pow(a, 0, 11) == 1
    assert isinstance(mod_pow(3, 4, 5), FpScalar)


@pytest.mark.parametrize("p", [2, 1, 9, 15, 0, -7])
def test_mod_pow_rejects_non_odd_primes(p):
    with pytest.raises(ValueError):
        mod_pow(2, 3, p)


def test_mul_order_examples():
    assert mul_order(29, 7) == 1
    assert mul_order(1, 13) == 1
    assert mul_order(3, 7) == 6


def test_mul_order_direct_powering():
    # 3, 2, 6, 4, 5, 1 mod 7
    seq = [pow(3, k, 7) for k in range(1, 7)]
    assert seq == [3, 2, 6, 4, 5, 1]


def test_mul_order_rejects_non_units():
    with pytest.raises(ValueError):
        mul_order(14, 7)


@given(st.sampled_from(ODD_PRIMES), st.integers(min_value=-10**6, max_value=10**6))
def test_mul_order_divides_p_minus_1(p, a):
    if a % p == 0:
        return
    f = mul_order(a, p)
    assert (p - 1) % f == 0
    assert pow(a, f, p) == 1
    assert all(pow(a, k, p) != 1 for k in range(1, f))


def test_roots_of_unity_examples():
    roots = nth_roots_of_unity(3, 7)
    assert [int(r.root) for r in roots] == [1, 2, 4]
    assert [int(r.root) for r in roots if r.primitive] == [2, 4]
    assert [int(r.root) for r in nth_roots_of_unity(1, 7)] == [1]
    roots11 = nth_roots_of_unity(5, 11)
    assert sorted(int(r.root) for r in roots11) == sorted([1, 3, 9, 5, 4])
    assert primitive_roots_of_unity(5, 11) == [3, 4, 5, 9]


def test_roots_of_unity_bad_j():
    with pytest.raises(ValueError):
        nth_roots_of_unity(4, 7)


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_primitive_root_counts(p):
    for j in divisors(p - 1):
        assert len(primitive_roots_of_unity(j, p)) == euler_phi(j)
        assert len(nth_roots_of_unity(j, p)) == j


def test_fp_scalar_arithmetic():
    a = FpScalar(5, 7)
    assert a + 4 == 2
    assert a * a == 4
    assert a.inverse() * a == 1
    assert a**6 == 1
    assert FpScalar(-1, 7).value == 6
    with pytest.raises(ZeroDivisionError):
        FpScalar(0, 7).inverse()


def test_null_space_dim_examples():
    for n in range(1, 6):
        I = FpMatrix.identity(n, 5)
        assert null_space_dim(I) == 0
        assert null_space_dim(I - I) == n


@pytest.mark.parametrize("c", [1, 2, 3, 5, 7])
def test_cyclic_permutation_minus_identity(c):
    P = FpMatrix([[int(i == (k + 1) % c) for k in range(c)] for i in range(c)], 11)
    assert null_space_dim(P.shift_diagonal(1)) == 1


def test_null_space_dim_rejects_rectangular():
    with pytest.raises(ValueError):
        null_space_dim(FpMatrix([[1, 2, 3]], 5))


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


square = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=0, max_value=6), min_size=n, max_size=n),
        min_size=n, max_size=n,
    )
)


@settings(max_examples=150)
@given(square, st.sampled_from([3, 5, 7]))
def test_rank_nullity(rows, p):
    M = FpMatrix(rows, p)
    assert rank(M) + null_space_dim(M) == M.cols


@settings(max_examples=100)
@given(square)
def test_row_reduction_deterministic(rows):
    a, b = FpMatrix(rows, 7), FpMatrix([list(r) for r in rows], 7)
    assert a.echelon() == b.echelon()


def test_rank_matches_determinant_for_2x2():
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    det = (a * d - b * c) % 3
                    M = FpMatrix([[a, b], [c, d]], 3)
                    assert (M.rank() == 2) == (det != 0)
