"""Primes dividing n in the cyclotomic ring Z[xi] and its real subring.

For an odd prime p and a rational prime q the three cases are

* ``RAMIFIED``: q == p, a single real prime which becomes a square upstairs;
* ``SPLIT``: the inertia degree f_q divides (p-1)/2, giving (p-1)/(2 f_q)
  real primes, each of which splits into a conjugate pair;
* ``NONSPLIT``: every real prime over q is inert.

Only ramified and split primes contribute to the free part of the centralizer.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .fieldlin import check_odd_prime, divisors, is_prime, mul_order

log = logging.getLogger(__name__)


class Kind(str, enum.Enum):
    RAMIFIED = "Ramified"
    SPLIT = "Split"
    NONSPLIT = "NonSplit"


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime ``p`` with ``p - 1 = 2**r * y``, ``y`` odd."""

    p: int
    r: int
    y: int

    @classmethod
    def from_prime(cls, p: int) -> "PrimeContext":
        check_odd_prime(p)
        y, r = p - 1, 0
        while y % 2 == 0:
            y //= 2
            r += 1
        return cls(p, r, y)

    def __post_init__(self):
        check_odd_prime(self.p)
        if self.r < 1 or self.y % 2 == 0 or self.p - 1 != 2**self.r * self.y:
            raise ValueError(f"inconsistent decomposition for p={self.p}")


@dataclass(frozen=True, order=True)
class PrimeFactor:
    q: int
    e: int = 1

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"{self.q} is not prime")
        if self.e < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.e}")


@dataclass(frozen=True)
class SplitDatum:
    q: int
    f_q: int
    kind: Kind
    real_prime_count: int

    @property
    def contributes(self) -> bool:
        return self.kind is not Kind.NONSPLIT


@dataclass(frozen=True)
class OrbitData:
    """Cycle data ``(c, d)`` of Z/jZ acting on the free part: ``d`` cycles of length ``c``."""

    j: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def dim(self) -> int:
        return sum(c * d for c, d in self.pairs)


def factorize(n: int) -> list[PrimeFactor]:
    """Prime factorization of ``|n|`` by trial division, ascending."""
    if n == 0:
        raise ValueError("n must be nonzero")
    n = abs(n)
    out = []
    q = 2
    while q * q <= n:
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        if e:
            out.append(PrimeFactor(q, e))
        q += 1 if q == 2 else 2
    if n > 1:
        out.append(PrimeFactor(n, 1))
    return out


def parse_factors(spec: str) -> list[PrimeFactor]:
    """Parse ``"7:1,29:1"`` (multiplicity optional) into sorted factors.

    Repeated primes are merged.
    """
    merged: dict[int, int] = {}
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        q_str, _, e_str = item.partition(":")
        q, e = int(q_str), int(e_str) if e_str else 1
        PrimeFactor(q, e)
        merged[q] = merged.get(q, 0) + e
    if not merged:
        raise ValueError("empty factor list")
    return [PrimeFactor(q, e) for q, e in sorted(merged.items())]


def product(factors: Iterable[PrimeFactor]) -> int:
    n = 1
    for f in factors:
        n *= f.q**f.e
    return n


def classify(q: int, ctx: PrimeContext) -> SplitDatum:
    p = ctx.p
    if q == p:
        return SplitDatum(q, 1, Kind.RAMIFIED, 1)
    f = mul_order(q, p)
    half = (p - 1) // 2
    if half % f == 0:
        if f % 2 == 0:
            log.debug("q=%d, p=%d: even f_q=%d dividing (p-1)/2 is classified Split", q, p, f)
        return SplitDatum(q, f, Kind.SPLIT, half // f)
    # f even here: (p-1)/f real primes, each inert upstairs
    return SplitDatum(q, f, Kind.NONSPLIT, (p - 1) // f)


def _require_p_divides(factors: Sequence[PrimeFactor], ctx: PrimeContext):
    if not any(f.q == ctx.p for f in factors):
        raise ValueError(f"p = {ctx.p} must divide n")


def sigma(factors: Sequence[PrimeFactor], ctx: PrimeContext) -> tuple[int, int]:
    """Number of split real primes over n, and that count plus the ramified prime."""
    _require_p_divides(factors, ctx)
    s = 0
    for f in factors:
        datum = classify(f.q, ctx)
        if datum.kind is Kind.SPLIT:
            s += datum.real_prime_count
    return s, s + 1


def centralizer_structure(ctx: PrimeContext, factors: Sequence[PrimeFactor]) -> tuple[int, int]:
    """``(torsion order, free rank)`` of the centralizer: Z/2pZ x Z^(sigma+1)."""
    _, sigma_plus = sigma(factors, ctx)
    return 2 * ctx.p, sigma_plus


def odd_divisors(ctx: PrimeContext) -> list[int]:
    return divisors(ctx.y)


def orbit_data(j: int, ctx: PrimeContext, factors: Sequence[PrimeFactor]) -> OrbitData:
    """Cycle structure of a generator of Z/jZ on the basis e_0..e_sigma.

    The ramified prime is a fixed point.  A split prime q gives
    ``c = gcd((p-1)/(2 f_q), j)`` and ``d = (p-1)/(2 f_q c)``.
    """
    if j < 1 or j % 2 == 0 or ctx.y % j:
        raise ValueError(f"j = {j} is not an odd divisor of y = {ctx.y}")
    _require_p_divides(factors, ctx)
    pairs = []
    for f in factors:
        datum = classify(f.q, ctx)
        if datum.kind is Kind.RAMIFIED:
            pairs.append((1, 1))
        elif datum.kind is Kind.SPLIT:
            count = datum.real_prime_count
            c = gcd(count, j)
            pairs.append((c, count // c))
            orbit_len = j // gcd(j, datum.f_q)
            if orbit_len != c:
                log.debug(
                    "q=%d, j=%d: gcd formula gives cycle length %d, "
                    "coset action gives %d", f.q, j, c, orbit_len,
                )
    return OrbitData(j, tuple(pairs))
