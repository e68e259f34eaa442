"""Exact scalars (rationals, prime-field elements) and dense exact linear algebra."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

# Largest primes below 2**62, in descending order.
PRIMES = (
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
    4611686018427387751,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
)


class BadPrime(ValueError):
    """The prime divides a denominator, so reduction is undefined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=64)
def _is_prime_cached(n: int) -> bool:
    return is_prime(n)


@dataclass(frozen=True)
class FpElement:
    value: int
    modulus: int

    def __post_init__(self):
        if not 2 < self.modulus < 2**62:
            raise ValueError(f"modulus {self.modulus} out of range (2, 2^62)")
        if not _is_prime_cached(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return reduce_mod_p(other, self.modulus).value
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElement(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElement(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElement(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElement(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.modulus)

    def inverse(self) -> FpElement:
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return FpElement(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FpElement(o, self.modulus).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o, self.modulus) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return (self.value - other) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} mod {self.modulus}"


def reduce_mod_p(r, p: int) -> FpElement:
    """Image of the rational ``r`` in F_p."""
    r = Fraction(r)
    if r.denominator % p == 0:
        raise BadPrime(f"{p} divides the denominator of {r}")
    return FpElement(r.numerator * pow(r.denominator, -1, p), p)


def usable_primes(values: Iterable, count: int = 3, candidates: Sequence[int] = PRIMES) -> list[int]:
    """First ``count`` primes from ``candidates`` dividing no denominator of ``values``."""
    dens = [Fraction(v).denominator for v in values]
    out = [p for p in candidates if all(d % p for d in dens)]
    if len(out) < count:
        raise BadPrime("not enough usable primes")
    return out[:count]


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple[tuple, ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, rows, ncols: int | None = None) -> ExactMatrix:
        rows = tuple(tuple(Fraction(x) if isinstance(x, int) else x for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def transpose(self) -> ExactMatrix:
        cols = tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols))
        return ExactMatrix(cols, self.nrows)

    def apply(self, v: Sequence) -> list:
        return [sum(a * b for a, b in zip(r, v)) for r in self.rows]

    def reduce(self, p: int) -> ExactMatrix:
        return ExactMatrix(tuple(tuple(reduce_mod_p(x, p) for x in r) for r in self.rows), self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def _is_rational(row) -> bool:
    return not row or not isinstance(row[0], FpElement)


def _size(x) -> int:
    if isinstance(x, Fraction):
        return x.numerator.bit_length() + x.denominator.bit_length()
    return 0


def _echelon(m: ExactMatrix):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for col in range(m.ncols):
        if r == len(a):
            break
        cands = [i for i in range(r, len(a)) if a[i][col] != 0]
        if not cands:
            continue
        # smallest pivot keeps rational growth down
        piv = min(cands, key=lambda i: _size(a[i][col]))
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    return a[:r], pivots


def rank(m: ExactMatrix) -> int:
    return len(_echelon(m)[1])


def kernel_basis(m: ExactMatrix) -> list[list]:
    """Basis of the right kernel {v : m v = 0}, one vector per free column."""
    rows, pivots = _echelon(m)
    n = m.ncols
    one = Fraction(1)
    if m.rows and not _is_rational(m.rows[0]):
        one = FpElement(1, m.rows[0][0].modulus)
    zero = one * 0
    basis = []
    pivot_set = set(pivots)
    for free in range(n):
        if free in pivot_set:
            continue
        v = [zero] * n
        v[free] = one
        for row, pc in zip(rows, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


# Plain-int helpers for hot loops over F_p.

def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    a = [[x % p for x in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][col], -1, p)
        pr = [x * inv % p for x in a[r]]
        a[r] = pr
        for i in range(r + 1, len(a)):
            f = a[i][col]
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], pr)]
        r += 1
        if r == len(a):
            break
    return r


def kernel_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    a = [[x % p for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(a):
            break
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][col], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    basis = []
    ps = set(pivots)
    for free in range(ncols):
        if free in ps:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, pc in zip(a, pivots):
            v[pc] = -row[free] % p
        basis.append(v)
    return basis


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction-free)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def lcm_of_denominators(values: Iterable) -> int:
    from math import lcm
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out
