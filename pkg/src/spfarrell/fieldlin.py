"""Arithmetic in Z/pZ and exact dense linear algebra over F_p.

Matrices are kept as tuples of tuples of reduced residues. Everything here is
small enough (the oracle blocks are at most a few hundred rows) that plain
integer row reduction is the right tool.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable, Sequence


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p == 2 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p!r}")


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n > 0`` in ascending order."""
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@dataclass(frozen=True, order=True)
class FpScalar:
    """A residue class modulo an odd prime."""

    value: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def _coerce(self, other) -> int:
        if isinstance(other, FpScalar):
            if other.modulus != self.modulus:
                raise ValueError("moduli differ")
            return other.value
        return int(other)

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return (self.value, self.modulus) == (other.value, other.modulus)
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __add__(self, other):
        return FpScalar((self.value + self._coerce(other)) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return FpScalar((self.value - self._coerce(other)) % self.modulus, self.modulus)

    def __mul__(self, other):
        return FpScalar(self.value * self._coerce(other) % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        return FpScalar(pow(self.value, exp, self.modulus), self.modulus)

    def inverse(self) -> "FpScalar":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse mod p")
        return FpScalar(pow(self.value, -1, self.modulus), self.modulus)

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


def mod_pow(base: int, exp: int, p: int) -> FpScalar:
    check_odd_prime(p)
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return FpScalar(pow(base, exp, p), p)


def mul_order(a: int, p: int) -> int:
    """Multiplicative order of ``a`` modulo the odd prime ``p``.

    Only divisors of ``p - 1`` are tried, smallest first.
    """
    check_odd_prime(p)
    if a % p == 0:
        raise ValueError(f"{a} is not a unit modulo {p}")
    for f in divisors(p - 1):
        if pow(a, f, p) == 1:
            return f
    raise AssertionError("unreachable: Fermat guarantees a^(p-1) = 1")


@dataclass(frozen=True)
class RootOfUnity:
    root: FpScalar
    primitive: bool


def nth_roots_of_unity(j: int, p: int) -> list[RootOfUnity]:
    """All ``x`` in F_p with ``x**j == 1``, ascending, flagged when primitive."""
    check_odd_prime(p)
    if j < 1 or (p - 1) % j:
        raise ValueError(f"{j} does not divide p - 1 = {p - 1}")
    out = []
    for x in range(1, p):
        if pow(x, j, p) == 1:
            out.append(RootOfUnity(FpScalar(x, p), mul_order(x, p) == j))
    return out


def primitive_roots_of_unity(j: int, p: int) -> list[int]:
    """Primitive ``j``-th roots of unity mod ``p`` as plain ints, ascending."""
    return [int(r.root) for r in nth_roots_of_unity(j, p) if r.primitive]


class FpMatrix:
    """Dense matrix over F_p with immutable entries."""

    __slots__ = ("rows", "cols", "p", "entries")

    def __init__(self, entries: Iterable[Sequence[int]], p: int):
        check_odd_prime(p)
        grid = tuple(tuple(int(x) % p for x in row) for row in entries)
        widths = {len(row) for row in grid}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.p = p
        self.entries = grid
        self.rows = len(grid)
        self.cols = widths.pop() if widths else 0

    @classmethod
    def identity(cls, n: int, p: int) -> "FpMatrix":
        return cls([[int(i == k) for k in range(n)] for i in range(n)], p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls([[0] * cols for _ in range(rows)], p)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, k = idx
        return self.entries[i][k]

    def __eq__(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.entries == other.entries

    def __hash__(self):
        return hash((self.p, self.entries))

    def __repr__(self):
        return f"FpMatrix({[list(r) for r in self.entries]}, p={self.p})"

    def _check_same(self, other: "FpMatrix"):
        if self.p != other.p:
            raise ValueError("moduli differ")

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_same(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return FpMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.p,
        )

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        return self + other.scale(-1)

    def scale(self, c: int) -> "FpMatrix":
        c = int(c)
        return FpMatrix([[c * a for a in r] for r in self.entries], self.p)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_same(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries))
        return FpMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries],
            self.p,
        )

    def __pow__(self, e: int) -> "FpMatrix":
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        result = FpMatrix.identity(self.rows, self.p)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def shift_diagonal(self, lam: int) -> "FpMatrix":
        """``M - lam * I``."""
        if not self.is_square:
            raise ValueError("non-square matrix")
        lam = int(lam)
        return FpMatrix(
            [[a - lam if i == k else a for k, a in enumerate(r)] for i, r in enumerate(self.entries)],
            self.p,
        )

    def echelon(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        """Reduced row echelon form and pivot columns."""
        return row_reduce(self.entries, self.p)

    def rank(self) -> int:
        return len(self.echelon()[1])


def row_reduce(entries: Sequence[Sequence[int]], p: int):
    """Gauss-Jordan elimination mod ``p``.

    Pivots are taken as the first nonzero entry scanning rows top-down, so the
    result depends only on the input.
    """
    m = [list(r) for r in entries]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        pivot_row = m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in m), tuple(pivots)


def rank(M: FpMatrix) -> int:
    return M.rank()


def null_space_dim(M: FpMatrix) -> int:
    if not M.is_square:
        raise ValueError(f"null_space_dim needs a square matrix, got {M.rows}x{M.cols}")
    return M.cols - M.rank()
