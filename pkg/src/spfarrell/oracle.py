"""Brute-force check of invariant dimensions by explicit linear algebra.

A generator of Z/jZ permutes the basis e_0..e_sigma in cycles.  We write down
its action on each exterior power, signs included, and count eigenvectors
over F_p directly.  Nothing here uses the generating polynomials, so the
results are an independent check on them.

Wedge spaces get large (C(16, 8) = 12870 basis vectors), but a signed
permutation matrix is block diagonal along the orbits of the underlying
index permutation, so each eigenspace dimension is a sum of row reductions
of small dense blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import lcm
from typing import Sequence

from .cohomology import DimTable
from .fieldlin import FpMatrix, check_odd_prime, mul_order, null_space_dim

DEFAULT_GUARD = 16


class OracleGuardExceeded(ValueError):
    pass


@dataclass(frozen=True)
class PermAction:
    blocks: tuple[tuple[int, int], ...]
    dim_E: int
    images: tuple[int, ...]

    @property
    def order(self) -> int:
        return lcm(*(c for c, d in self.blocks if d))

    def fixed_points(self) -> list[int]:
        return [i for i, img in enumerate(self.images) if img == i]


@dataclass(frozen=True)
class WedgeAction:
    """``gamma(e_S) = signs[S] * e_{images[S]}`` on the basis of m-subsets."""

    m: int
    basis: tuple[tuple[int, ...], ...]
    images: tuple[int, ...]
    signs: tuple[int, ...]


def build_perm(pairs, guard: int = DEFAULT_GUARD) -> PermAction:
    """Block-diagonal permutation with ``d`` disjoint ``c``-cycles per pair."""
    blocks = tuple((int(c), int(d)) for c, d in getattr(pairs, "pairs", pairs))
    for c, d in blocks:
        if c < 1 or d < 0:
            raise ValueError(f"bad cycle data ({c}, {d})")
    dim = sum(c * d for c, d in blocks)
    if dim > guard:
        raise OracleGuardExceeded(f"dim E = {dim} exceeds oracle guard {guard}")
    images = []
    start = 0
    for c, d in blocks:
        for _ in range(d):
            images.extend(start + (k + 1) % c for k in range(c))
            start += c
    return PermAction(blocks, dim, tuple(images))


def _sort_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    inversions = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inversions % 2 else 1


def wedge_action(perm: PermAction, m: int) -> WedgeAction:
    if not 0 <= m <= perm.dim_E:
        raise ValueError(f"m = {m} outside [0, {perm.dim_E}]")
    basis = tuple(combinations(range(perm.dim_E), m))
    index = {s: i for i, s in enumerate(basis)}
    images, signs = [], []
    for s in basis:
        img = [perm.images[i] for i in s]
        images.append(index[tuple(sorted(img))])
        signs.append(_sort_sign(img))
    return WedgeAction(m, basis, tuple(images), tuple(signs))


def wedge_matrix(perm: PermAction, m: int, p: int) -> FpMatrix:
    """Dense matrix of the induced action on the m-th exterior power."""
    check_odd_prime(p)
    act = wedge_action(perm, m)
    n = len(act.basis)
    grid = [[0] * n for _ in range(n)]
    for col, (row, sign) in enumerate(zip(act.images, act.signs)):
        grid[row][col] = sign
    return FpMatrix(grid, p)


def _eigenspace_dim(act: WedgeAction, lam: int, p: int) -> int:
    """``dim ker(W - lam I)`` computed orbit block by orbit block."""
    seen = [False] * len(act.images)
    total = 0
    for start in range(len(act.images)):
        if seen[start]:
            continue
        orbit = []
        i = start
        while not seen[i]:
            seen[i] = True
            orbit.append(i)
            i = act.images[i]
        local = {b: k for k, b in enumerate(orbit)}
        n = len(orbit)
        grid = [[0] * n for _ in range(n)]
        for col, b in enumerate(orbit):
            grid[local[act.images[b]]][col] = act.signs[b]
        total += null_space_dim(FpMatrix(grid, p).shift_diagonal(lam))
    return total


def _validate(pairs, p: int, j: int, mu: int, guard: int) -> PermAction:
    check_odd_prime(p)
    if j < 1 or (p - 1) % j:
        raise ValueError(f"j = {j} does not divide p - 1 = {p - 1}")
    if mu % p == 0 or mul_order(mu, p) != j:
        raise ValueError(f"mu = {mu} is not a primitive {j}-th root of unity mod {p}")
    perm = build_perm(pairs, guard)
    if j % perm.order:
        raise ValueError(f"permutation of order {perm.order} is not an action of Z/{j}Z")
    return perm


def eigen_dims_bruteforce(pairs, p: int, j: int, mu: int, m: int, l: int,
                          guard: int = DEFAULT_GUARD) -> int:
    perm = _validate(pairs, p, j, mu, guard)
    return _eigenspace_dim(wedge_action(perm, m), pow(mu, l % j, p), p)


def invariant_dims_bruteforce(pairs, p: int, j: int, mu: int,
                              guard: int = DEFAULT_GUARD) -> DimTable:
    """Dimensions of the Z/jZ-invariants in degrees ``0 .. 2j-1``.

    ``x**k (x) e`` with ``e`` in the ``lam``-eigenspace of the m-th wedge
    power is fixed iff ``mu**k * lam == 1``; in degree ``i = 2k + m`` that
    means ``lam = mu**((m - i)/2)``.
    """
    perm = _validate(pairs, p, j, mu, guard)
    actions = [wedge_action(perm, m) for m in range(perm.dim_E + 1)]
    cache: dict[tuple[int, int], int] = {}
    dims = []
    for i in range(2 * j):
        total = 0
        for m in range(i % 2, perm.dim_E + 1, 2):
            lam = pow(mu, ((m - i) // 2) % j, p)
            if (m, lam) not in cache:
                cache[m, lam] = _eigenspace_dim(actions[m], lam, p)
            total += cache[m, lam]
        dims.append(total)
    return DimTable(j, tuple(dims))


def eigen_total(pairs, p: int, j: int, mu: int, m: int) -> int:
    """Sum of all eigenspace dimensions on the m-th wedge power; ``C(dim E, m)`` when diagonalisable."""
    perm = _validate(pairs, p, j, mu, DEFAULT_GUARD)
    act = wedge_action(perm, m)
    return sum(_eigenspace_dim(act, pow(mu, l, p), p) for l in range(j))

