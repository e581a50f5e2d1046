"""Sparse integer polynomials: the bigraded generating function in (t, mu) and
its one-variable Laurent specialisation t -> z, mu -> z**-2.

Coefficients are Python ints, so nothing overflows however large the products.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence


class LaurentPoly:
    """Integer Laurent polynomial ``sum a_l z**l`` with finite support."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {int(l): int(a) for l, a in (coeffs or {}).items() if a}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def binomial(cls, exp: int) -> "LaurentPoly":
        """``1 + z**exp``."""
        out: dict[int, int] = defaultdict(int)
        out[0] += 1
        out[exp] += 1
        return cls(out)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        terms = " + ".join(f"{a}*z^{l}" for l, a in sorted(self.coeffs.items()))
        return f"LaurentPoly({terms})"

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = defaultdict(int, self.coeffs)
        for l, a in other.coeffs.items():
            out[l] += a
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({l: -a for l, a in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({l: a * other for l, a in self.coeffs.items()})
        out: dict[int, int] = defaultdict(int)
        for l1, a1 in self.coeffs.items():
            for l2, a2 in other.coeffs.items():
                out[l1 + l2] += a1 * a2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        out = LaurentPoly.one()
        for _ in range(e):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``z**k``."""
        return LaurentPoly({l + k: a for l, a in self.coeffs.items()})

    @property
    def min_exp(self) -> int:
        return min(self.coeffs)

    @property
    def max_exp(self) -> int:
        return max(self.coeffs)

    @property
    def width(self) -> int:
        return self.max_exp - self.min_exp if self.coeffs else 0

    def at_one(self) -> int:
        return sum(self.coeffs.values())

    def dense(self) -> list[int]:
        """Coefficients of ``z**-min_exp * self`` from degree 0 up."""
        if not self.coeffs:
            return []
        lo = self.min_exp
        out = [0] * (self.width + 1)
        for l, a in self.coeffs.items():
            out[l - lo] = a
        return out


class BiPoly:
    """``sum D[m, l] t**m mu**l`` with ``mu`` a ``j``-th root of unity.

    ``mu``-exponents are reduced into ``[0, j)`` on construction.
    """

    __slots__ = ("j", "coeffs")

    def __init__(self, j: int, coeffs: Mapping[tuple[int, int], int] | None = None):
        if j < 1:
            raise ValueError("j must be positive")
        self.j = j
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (m, l), a in (coeffs or {}).items():
            if m < 0:
                raise ValueError("t-degree must be non-negative")
            acc[m, l % j] += a
        self.coeffs = {k: a for k, a in acc.items() if a}

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.j == other.j and self.coeffs == other.coeffs

    def __repr__(self):
        terms = " + ".join(f"{a}*t^{m}*mu^{l}" for (m, l), a in sorted(self.coeffs.items()))
        return f"BiPoly(j={self.j}: {terms or 0})"

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if self.j != other.j:
            raise ValueError("mu orders differ")
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (m1, l1), a1 in self.coeffs.items():
            for (m2, l2), a2 in other.coeffs.items():
                out[m1 + m2, l1 + l2] += a1 * a2
        return BiPoly(self.j, out)

    def coefficient(self, m: int, l: int) -> int:
        return self.coeffs.get((m, l % self.j), 0)

    @property
    def t_degree(self) -> int:
        return max((m for m, _ in self.coeffs), default=0)

    def at_mu_one(self) -> dict[int, int]:
        """Coefficients of the ``t``-polynomial obtained by setting ``mu = 1``."""
        out: dict[int, int] = defaultdict(int)
        for (m, _), a in self.coeffs.items():
            out[m] += a
        return dict(out)

    def specialize(self) -> LaurentPoly:
        """``t -> z``, ``mu -> z**-2`` using the stored (reduced) exponents.

        Agrees with the unreduced specialisation modulo ``z**(2j) - 1``.
        """
        out: dict[int, int] = defaultdict(int)
        for (m, l), a in self.coeffs.items():
            out[m - 2 * l] += a
        return LaurentPoly(out)


def _check_pairs(j: int, pairs: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    pairs = [(int(c), int(d)) for c, d in pairs]
    for c, d in pairs:
        if c < 1 or d < 0 or j % c:
            raise ValueError(f"cycle length {c} does not divide j = {j}")
    return pairs


def _pairs_of(pairs):
    return getattr(pairs, "pairs", pairs)


def mu_exponents(j: int, c: int) -> list[int]:
    """Unreduced exponents ``k j / c``, ``k = 1..c``: the eigenvalues of a ``c``-cycle."""
    return [k * j // c for k in range(1, c + 1)]


def build_L(j: int, pairs) -> BiPoly:
    """Expand ``prod (prod_k (1 + t mu**(k j/c)))**d`` over the ``(c, d)`` pairs."""
    pairs = _check_pairs(j, _pairs_of(pairs))
    out = BiPoly(j, {(0, 0): 1})
    for c, d in pairs:
        for _ in range(d):
            for e in mu_exponents(j, c):
                out = out * BiPoly(j, {(0, 0): 1, (1, e): 1})
    return out


def build_L_z(j: int, pairs) -> LaurentPoly:
    """The same product with ``t -> z`` and ``mu -> z**-2`` applied factor by factor."""
    pairs = _check_pairs(j, _pairs_of(pairs))
    out = LaurentPoly.one()
    for c, d in pairs:
        block = LaurentPoly.one()
        for e in mu_exponents(j, c):
            block = block * LaurentPoly.binomial(1 - 2 * e)
        out = out * block**d
    return out


def residue_sums(f: LaurentPoly, modulus: int) -> list[int]:
    """``S[i] = sum of a_l over l = i (mod modulus)`` for ``i`` in ``range(modulus)``."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    sums = [0] * modulus
    for l, a in f.coeffs.items():
        sums[l % modulus] += a
    return sums


def divides_one_plus_power(g: Sequence[int], a: int) -> bool:
    """Exact division test of the dense polynomial ``g`` by ``1 + z**a``, ``a > 0``."""
    r = list(g)
    for deg in range(len(r) - 1, a - 1, -1):
        c = r[deg]
        if c:
            r[deg] = 0
            r[deg - a] -= c
    return not any(r[:a])


def has_shifted_factor(f: LaurentPoly, j: int) -> bool:
    """Whether ``1 + z**(j + 2kj)`` divides ``f`` for some integer ``k``.

    ``1 + z**-a`` and ``1 + z**a`` are associates, so ``k`` and ``-1 - k``
    give the same candidate; only exponents no wider than the support of
    ``f`` can divide it.
    """
    if not f:
        raise ValueError("f must be nonzero")
    if j < 1:
        raise ValueError("j must be positive")
    g = f.dense()
    return any(divides_one_plus_power(g, a) for a in range(j, f.width + 1, 2 * j))


def sums_match_shift(f: LaurentPoly, j: int) -> bool:
    if j < 1:
        raise ValueError("j must be positive")
    s = residue_sums(f, 2 * j)
    return all(s[i] == s[(i + j) % (2 * j)] for i in range(2 * j))
