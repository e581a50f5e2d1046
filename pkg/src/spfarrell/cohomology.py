"""Dimensions of the p-primary Farrell cohomology of the normalizer factors.

For a subgroup of order p with N(P)/C(P) = Z/jZ, the p-primary cohomology of
the centralizer is F_p[x, x^-1] (x) Lambda(E) with E = F_p^(sigma+1).  A
generator scales x by a primitive j-th root mu and permutes the basis of E.
The invariant dimension in degree i is read off the generating polynomial in
two ways:

* bigraded: ``sum over m = i (mod 2) of D_m[(m - i)/2 mod j]``;
* one variable: ``sum over l = i (mod 2j) of a_l`` in ``L(z, z**-2)``.

Both are always computed and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Sequence

from . import laurent, splitting
from .splitting import OrbitData, PrimeContext, PrimeFactor

PID_NOTICE = (
    "Z[1/n][xi] and Z[1/n][xi + xi^-1] are assumed to be principal ideal "
    "domains; this is not checked."
)
PID_SMALL_P_NOTICE = (
    "For p <= 19 the cyclotomic field Q(xi_p) has class number 1, so the "
    "principal ideal hypothesis holds for every n divisible by p."
)
MULTIPLICITY_NOTICE = (
    "Factors are reported per j; the number of conjugacy classes of order-p "
    "subgroups with a given j is not computed."
)


class InternalInconsistencyError(RuntimeError):
    """The two dimension routes disagreed.  Always a bug."""


@dataclass(frozen=True)
class DimTable:
    """Invariant dimensions in degrees ``0 .. 2j-1``; the table is ``2j``-periodic."""

    j: int
    dims: tuple[int, ...]

    def __post_init__(self):
        if len(self.dims) != 2 * self.j:
            raise ValueError(f"expected {2 * self.j} entries, got {len(self.dims)}")

    def __getitem__(self, i: int) -> int:
        return self.dims[i % (2 * self.j)]

    def __len__(self):
        return len(self.dims)

    def shift_invariant(self, shift: int | None = None) -> bool:
        shift = self.j if shift is None else shift
        return all(self[i] == self[i + shift] for i in range(2 * self.j))

    def as_list(self) -> list[int]:
        return list(self.dims)


@dataclass(frozen=True)
class FactorReport:
    j: int
    orbit: OrbitData
    dims: DimTable
    b_j: int
    oracle_checked: bool = False

    def to_dict(self) -> dict:
        return {
            "j": self.j,
            "pairs": [[c, d] for c, d in self.orbit.pairs],
            "dims": self.dims.as_list(),
            "b_j": self.b_j,
            "oracle_checked": self.oracle_checked,
        }


@dataclass(frozen=True)
class GlobalReport:
    p: int
    n: int
    y: int
    sigma: int
    sigma_plus: int
    centralizer: tuple[int, int]
    factors: tuple[FactorReport, ...]
    iso_step: int
    p_period: int
    assumptions: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        torsion, free = self.centralizer
        return {
            "p": self.p,
            "n": self.n,
            "y": self.y,
            "sigma": self.sigma,
            "sigma_plus": self.sigma_plus,
            "centralizer": {"torsion_order": torsion, "free_rank": free},
            "assumptions": list(self.assumptions),
            "factors": [f.to_dict() for f in self.factors],
            "iso_step": self.iso_step,
            "p_period": self.p_period,
        }


def centralizer_cohomology(sigma: int) -> tuple[int, int]:
    """Ranks of the integral cohomology (over Z/2pZ) and of its p-part (over Z/pZ), in any degree."""
    if sigma < 0:
        raise ValueError("sigma must be non-negative")
    return 2**sigma, 2**sigma


def dims_bigraded(L: laurent.BiPoly, top: int) -> list[int]:
    j = L.j
    dims = []
    for i in range(2 * j):
        dims.append(sum(L.coefficient(m, (m - i) // 2) for m in range(i % 2, top + 1, 2)))
    return dims


def dims_residue(Lz: laurent.LaurentPoly, j: int) -> list[int]:
    return laurent.residue_sums(Lz, 2 * j)


def invariant_dims_from_pairs(j: int, pairs) -> DimTable:
    """Invariant dimensions for cycle data ``pairs``, cross-checked by both routes."""
    pairs = getattr(pairs, "pairs", pairs)
    top = sum(c * d for c, d in pairs)
    by_t = dims_bigraded(laurent.build_L(j, pairs), top)
    by_z = dims_residue(laurent.build_L_z(j, pairs), j)
    if by_t != by_z:
        raise InternalInconsistencyError(
            f"j={j}, pairs={list(pairs)}: bigraded {by_t} != residue sums {by_z}"
        )
    return DimTable(j, tuple(by_t))


def _check_j(ctx: PrimeContext, j: int):
    if j < 1 or j % 2 == 0 or ctx.y % j:
        raise ValueError(f"j = {j} is not an odd divisor of y = {ctx.y}")


def invariant_dims(ctx: PrimeContext, factors: Sequence[PrimeFactor], j: int) -> DimTable:
    _check_j(ctx, j)
    return invariant_dims_from_pairs(j, splitting.orbit_data(j, ctx, factors))


def b_j_from_pairs(j: int, pairs) -> int:
    """``j`` when some block is a full ``j``-cycle, else ``2j``."""
    pairs = getattr(pairs, "pairs", pairs)
    return j if any(c == j and d > 0 for c, d in pairs) else 2 * j


def b_j(ctx: PrimeContext, factors: Sequence[PrimeFactor], j: int) -> int:
    _check_j(ctx, j)
    return b_j_from_pairs(j, splitting.orbit_data(j, ctx, factors))


def iso_step(ctx: PrimeContext, factors: Sequence[PrimeFactor]) -> int:
    splitting.sigma(factors, ctx)
    return lcm(*(b_j(ctx, factors, j) for j in splitting.odd_divisors(ctx)))


def p_period(ctx: PrimeContext) -> int:
    return 2 * ctx.y


def assumptions(ctx: PrimeContext) -> tuple[str, ...]:
    notes = [PID_NOTICE]
    if ctx.p <= 19:
        notes.append(PID_SMALL_P_NOTICE)
    notes.append(MULTIPLICITY_NOTICE)
    return tuple(notes)


def factor_report(ctx: PrimeContext, factors: Sequence[PrimeFactor], j: int) -> FactorReport:
    _check_j(ctx, j)
    orbit = splitting.orbit_data(j, ctx, factors)
    return FactorReport(j, orbit, invariant_dims_from_pairs(j, orbit), b_j_from_pairs(j, orbit))


def report(ctx: PrimeContext, factors: Sequence[PrimeFactor], j_filter: int | None = None,
           n: int | None = None) -> GlobalReport:
    """Assemble the factor-wise report.

    ``iso_step`` is always taken over every odd ``j | y``; ``j_filter`` only
    restricts which factors are listed.  ``n`` defaults to the product of
    ``factors``.
    """
    sig, sig_plus = splitting.sigma(factors, ctx)
    js = splitting.odd_divisors(ctx)
    if j_filter is not None:
        _check_j(ctx, j_filter)
    all_factors = [factor_report(ctx, factors, j) for j in js]
    step = lcm(*(f.b_j for f in all_factors))
    shown = tuple(f for f in all_factors if j_filter is None or f.j == j_filter)
    return GlobalReport(
        p=ctx.p,
        n=splitting.product(factors) if n is None else n,
        y=ctx.y,
        sigma=sig,
        sigma_plus=sig_plus,
        centralizer=splitting.centralizer_structure(ctx, factors),
        factors=shown,
        iso_step=step,
        p_period=p_period(ctx),
        assumptions=assumptions(ctx),
    )
