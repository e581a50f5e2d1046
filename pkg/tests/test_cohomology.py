from itertools import combinations
from math import comb, lcm

import pytest

from spfarrell import cohomology
from spfarrell.cohomology import (
    DimTable,
    InternalInconsistencyError,
    b_j,
    b_j_from_pairs,
    centralizer_cohomology,
    invariant_dims,
    invariant_dims_from_pairs,
    iso_step,
    p_period,
    report,
)
from spfarrell.fieldlin import is_prime, primitive_roots_of_unity
from spfarrell.laurent import build_L_z, has_shifted_factor
from spfarrell.oracle import invariant_dims_bruteforce
from spfarrell.splitting import PrimeContext, factorize, odd_divisors, orbit_data, sigma

P7 = PrimeContext.from_prime(7)
F203 = factorize(203)


def test_centralizer_cohomology():
    assert centralizer_cohomology(3) == (8, 8)
    assert centralizer_cohomology(0) == (1, 1)
    assert centralizer_cohomology(5) == (32, 32)
    for parity in (0, 1):
        assert sum(comb(6, m) for m in range(parity, 7, 2)) == 32


def test_invariant_dims_examples():
    assert invariant_dims(P7, F203, 3).dims == (3, 3, 2, 3, 3, 2)
    assert invariant_dims(P7, factorize(7), 3).dims == (1, 1, 0, 0, 0, 0)
    for p, n in [(7, 203), (13, 13 * 3), (11, 11 * 23 * 3), (5, 5)]:
        ctx = PrimeContext.from_prime(p)
        s, _ = sigma(factorize(n), ctx)
        assert invariant_dims(ctx, factorize(n), 1).dims == (2**s, 2**s)


def test_invariant_dims_rejects_bad_j():
    with pytest.raises(ValueError):
        invariant_dims(P7, F203, 2)
    with pytest.raises(ValueError):
        invariant_dims(P7, F203, 9)


def test_route_disagreement_is_fatal(monkeypatch):
    monkeypatch.setattr(cohomology, "dims_residue", lambda Lz, j: [0] * (2 * j))
    with pytest.raises(InternalInconsistencyError):
        invariant_dims_from_pairs(3, [(1, 1), (3, 1)])


def test_dim_table_periodic_indexing():
    t = DimTable(3, (3, 3, 2, 3, 3, 2))
    assert [t[i] for i in range(-6, 12)] == [3, 3, 2, 3, 3, 2] * 3
    assert t.shift_invariant()
    assert not DimTable(3, (1, 1, 0, 0, 0, 0)).shift_invariant()
    with pytest.raises(ValueError):
        DimTable(3, (1, 2))


def test_b_j_examples():
    assert b_j(P7, F203, 3) == 3
    assert b_j(P7, F203, 1) == 1
    assert b_j(P7, factorize(7), 1) == 1
    assert b_j(P7, factorize(7), 3) == 6


def test_iso_step_and_period():
    assert iso_step(P7, F203) == 3
    assert iso_step(PrimeContext.from_prime(5), factorize(5)) == 1
    assert iso_step(P7, factorize(7)) == 6
    assert p_period(P7) == 6
    assert p_period(PrimeContext.from_prime(5)) == 2
    assert p_period(PrimeContext.from_prime(13)) == 6
    with pytest.raises(ValueError):
        iso_step(P7, factorize(29))


def test_report_examples():
    r = report(P7, F203)
    assert [f.j for f in r.factors] == [1, 3]
    assert (r.sigma, r.sigma_plus, r.centralizer) == (3, 4, (14, 4))
    assert (r.iso_step, r.p_period) == (3, 6)
    r = report(PrimeContext.from_prime(5), factorize(5))
    assert [(f.j, f.dims.dims) for f in r.factors] == [(1, (1, 1))]
    assert (r.iso_step, r.p_period) == (1, 2)
    r = report(P7, factorize(7))
    assert r.iso_step == r.p_period == 6
    r = report(P7, F203, j_filter=3)
    assert [f.j for f in r.factors] == [3]
    assert r.iso_step == 3


def test_report_notes_assumptions():
    notes = report(P7, F203).assumptions
    assert any("principal ideal" in a for a in notes)
    assert any("class number 1" in a for a in notes)
    ctx23 = PrimeContext.from_prime(23)
    notes23 = report(ctx23, factorize(23)).assumptions
    assert not any("class number 1" in a for a in notes23)


PRIMES = [p for p in range(3, 50) if is_prime(p)]
N_EXTRA = [1, 2, 3, 5, 2 * 3, 11, 13, 29, 31, 43, 2 * 29, 3 * 5 * 7, 11 * 13, 2 * 3 * 5 * 7 * 11 * 13]


def grid():
    for p in PRIMES:
        ctx = PrimeContext.from_prime(p)
        for extra in N_EXTRA:
            fs = factorize(p * extra)
            for j in odd_divisors(ctx):
                yield ctx, fs, j


@pytest.mark.parametrize("p", PRIMES)
def test_dims_sum_to_exterior_algebra(p):
    ctx = PrimeContext.from_prime(p)
    for extra in N_EXTRA:
        fs = factorize(p * extra)
        _, sp = sigma(fs, ctx)
        for j in odd_divisors(ctx):
            # both routes already agree inside invariant_dims
            assert sum(invariant_dims(ctx, fs, j).dims) == 2**sp


def test_shift_law_on_grid():
    count = 0
    for ctx, fs, j in grid():
        od = orbit_data(j, ctx, fs)
        dims = invariant_dims(ctx, fs, j)
        full_cycle = b_j(ctx, fs, j) == j
        assert dims.shift_invariant() == full_cycle == has_shifted_factor(build_L_z(j, od), j)
        # every table repeats with period 2j
        assert dims.shift_invariant(2 * j)
        count += 1
    assert count > 100


def test_iso_step_is_lcm_on_grid():
    for p in PRIMES:
        ctx = PrimeContext.from_prime(p)
        for extra in N_EXTRA:
            fs = factorize(p * extra)
            step = iso_step(ctx, fs)
            assert step == lcm(*(b_j(ctx, fs, j) for j in odd_divisors(ctx)))
            assert step in (ctx.y, 2 * ctx.y)
            assert p_period(ctx) == 2 * ctx.y


def test_oracle_agrees_on_grid():
    checked = 0
    for ctx, fs, j in grid():
        od = orbit_data(j, ctx, fs)
        if od.dim > 9:
            continue
        formula = invariant_dims(ctx, fs, j)
        for mu in primitive_roots_of_unity(j, ctx.p)[:2]:
            assert invariant_dims_bruteforce(od, ctx.p, j, mu) == formula
            checked += 1
    assert checked > 100


def enumerate_dims(j, pairs):
    """Invariant count straight from eigenvalue exponents, no polynomials."""
    exps = []
    for c, d in pairs:
        for _ in range(d):
            exps.extend(k * j // c for k in range(1, c + 1))
    dims = [0] * (2 * j)
    for m in range(len(exps) + 1):
        for sub in combinations(exps, m):
            l = sum(sub)
            for i in range(m % 2, 2 * j, 2):
                if (l - (m - i) // 2) % j == 0:
                    dims[i] += 1
    return tuple(dims)


@pytest.mark.parametrize("j,pairs", [
    (3, [(1, 1), (3, 1)]),
    (3, [(1, 1)]),
    (5, [(1, 1), (5, 2)]),
    (9, [(1, 1), (3, 2), (9, 1)]),
    (15, [(1, 1), (3, 1), (5, 1)]),
    (15, [(1, 2), (15, 1)]),
])
def test_formula_against_enumeration(j, pairs):
    expected = enumerate_dims(j, pairs)
    assert invariant_dims_from_pairs(j, pairs).dims == expected
    shift = all(expected[i] == expected[(i + j) % (2 * j)] for i in range(2 * j))
    assert shift == (b_j_from_pairs(j, pairs) == j)
