"""Exact dense linear algebra over the rationals and over prime fields.

Prime-field matrices are stored as int64 arrays reduced mod p and eliminated
by jit-compiled Gaussian elimination; the default prime 2^31 - 1 gets a
specialized kernel whose reduction is two shift-and-add folds instead of a
hardware division.  Rational matrices are object arrays of Fraction and are
eliminated fraction-free (Bareiss) for ranks, or with Fraction pivoting for
kernels and inverses.  Every result is exact; there is no floating point
anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import numba
import numpy as np

MERSENNE31 = (1 << 31) - 1

# Witnesses for deterministic Miller-Rabin, sound for all n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: char == 0 means the rationals, char == p means F_p."""

    char: int

    def __post_init__(self):
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"field characteristic must be 0 or prime, got {self.char}")
        if self.char != 0 and self.char.bit_length() > 31:
            # int64 products of two reduced entries must not overflow
            raise ValueError(f"prime fields are supported up to 31 bits, got {self.char}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(0)

    @classmethod
    def prime(cls, p: int = MERSENNE31) -> FieldSpec:
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.char == 0

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse "q" or "fp:<prime>" (the CLI field syntax)."""
        if text == "q":
            return cls.rationals()
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"bad prime in field spec {text!r}") from None
            return cls.prime(p)
        raise ValueError(f"bad field spec {text!r}, expected 'q' or 'fp:<prime>'")

    def __str__(self) -> str:
        return "q" if self.char == 0 else f"fp:{self.char}"


def _coerce_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    raise TypeError(f"rational matrix entries must be int or Fraction, got {type(x).__name__}")


class ExactMatrix:
    """Dense exact matrix over a FieldSpec.

    Zero-by-n and n-by-zero shapes are legal and behave like the corresponding
    linear maps; they come up constantly as empty blocks of Hom differentials.
    """

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data: np.ndarray):
        if data.ndim != 2:
            raise ValueError(f"matrix data must be 2-d, got shape {data.shape}")
        if field.is_rational:
            if data.dtype != object:
                data = data.astype(object)
            data = np.array([[_coerce_rational(x) for x in row] for row in data.tolist()],
                            dtype=object).reshape(data.shape)
        else:
            data = np.asarray(data, dtype=np.int64) % field.char
        self.field = field
        self.data = data

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldSpec, rows, shape: tuple[int, int] | None = None) -> ExactMatrix:
        """Build from a list of row lists; pass shape for empty matrices."""
        rows = [list(r) for r in rows]
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
            raise ValueError("ragged rows or shape mismatch")
        if field.is_rational:
            data = np.empty(shape, dtype=object)
            for i, row in enumerate(rows):
                for j, x in enumerate(row):
                    data[i, j] = _coerce_rational(x)
        else:
            data = np.array(rows, dtype=np.int64).reshape(shape)
        return cls(field, data)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> ExactMatrix:
        if field.is_rational:
            data = np.full((rows, cols), Fraction(0), dtype=object)
        else:
            data = np.zeros((rows, cols), dtype=np.int64)
        return cls(field, data)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> ExactMatrix:
        m = cls.zeros(field, n, n)
        one = Fraction(1) if field.is_rational else 1
        for i in range(n):
            m.data[i, i] = one
        return m

    # -- shape ---------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    # -- arithmetic ----------------------------------------------------

    def _check_field(self, other: ExactMatrix):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        if self.field.is_rational:
            return ExactMatrix(self.field, self.data + other.data)
        return ExactMatrix(self.field, (self.data + other.data) % self.field.char)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + (-other)

    def __neg__(self) -> ExactMatrix:
        if self.field.is_rational:
            return ExactMatrix(self.field, -self.data)
        return ExactMatrix(self.field, (self.field.char - self.data) % self.field.char)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_field(other)
        if self.cols != other.rows:
            raise ValueError(f"inner dimension mismatch: {self.shape} @ {other.shape}")
        if self.field.is_rational:
            if self.cols == 0:
                return ExactMatrix.zeros(self.field, self.rows, other.cols)
            return ExactMatrix(self.field, np.dot(self.data, other.data))
        return ExactMatrix(self.field, _matmul_modp(self.data, other.data, self.field.char))

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.field, self.data.T.copy())

    def kron(self, other: ExactMatrix) -> ExactMatrix:
        self._check_field(other)
        data = np.kron(self.data, other.data)
        if not self.field.is_rational:
            # entries of the factors are < p, so products fit int64 before reduction
            data %= self.field.char
        return ExactMatrix(self.field, data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and bool(np.all(self.data == other.data)))

    def __hash__(self):
        return hash((self.field, self.shape, tuple(self.data.flat)))

    def to_rows(self) -> list[list]:
        """Entries as nested Python lists (ints mod p, or Fractions)."""
        if self.field.is_rational:
            return [list(row) for row in self.data.tolist()]
        return self.data.tolist()

    def __repr__(self):
        return f"ExactMatrix({self.field}, {self.rows}x{self.cols})"


# -- jit elimination kernels -----------------------------------------------
#
# Both kernels destroy their argument; callers pass a copy.

_M31 = np.int64(MERSENNE31)


@numba.njit(cache=True, inline="always")
def _fold31(x):
    # reduce x < 2^62 to [0, 2^31-1] via mersenne folding
    x = (x & _M31) + (x >> 31)
    x = (x & _M31) + (x >> 31)
    if x >= _M31:
        x -= _M31
    return x


@numba.njit(cache=True)
def _inv_mersenne(base):
    # base^(p-2) by square and multiply; products stay below 2^62
    result = np.int64(1)
    e = MERSENNE31 - 2
    b = base
    while e:
        if e & 1:
            result = _fold31(result * b)
        b = _fold31(b * b)
        e >>= 1
    return result


@numba.njit(cache=True)
def _inv_modp(base, p):
    result = np.int64(1)
    e = p - 2
    b = base % p
    while e:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return result


@numba.njit(cache=True)
def _rank_mersenne(a):
    # row echelon over F_{2^31-1}; products of reduced entries stay < 2^62
    m, n = a.shape
    rank = 0
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, n):
                t = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = t
        pinv = _inv_mersenne(a[rank, col])
        for i in range(rank + 1, m):
            f = a[i, col]
            if f == 0:
                continue
            f = _fold31(f * pinv)
            fneg = _M31 - f
            for j in range(col, n):
                a[i, j] = _fold31(a[i, j] + fneg * a[rank, j])
        rank += 1
        if rank == m:
            break
    return rank


@numba.njit(cache=True)
def _rank_modp(a, p):
    m, n = a.shape
    rank = 0
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, n):
                t = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = t
        pinv = _inv_modp(a[rank, col], p)
        for i in range(rank + 1, m):
            f = a[i, col] * pinv % p
            if f == 0:
                continue
            fneg = p - f
            for j in range(col, n):
                a[i, j] = (a[i, j] + fneg * a[rank, j]) % p
        rank += 1
        if rank == m:
            break
    return rank


@numba.njit(cache=True)
def _rref_modp(a, p, pivot_cols):
    # full reduced row echelon; fills pivot_cols[:rank], returns rank
    m, n = a.shape
    rank = 0
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(n):
                t = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = t
        pinv = _inv_modp(a[rank, col], p)
        for j in range(col, n):
            a[rank, j] = a[rank, j] * pinv % p
        for i in range(m):
            if i == rank:
                continue
            f = a[i, col]
            if f == 0:
                continue
            fneg = p - f
            for j in range(col, n):
                a[i, j] = (a[i, j] + fneg * a[rank, j]) % p
        pivot_cols[rank] = col
        rank += 1
        if rank == m:
            break
    return rank


def _matmul_modp(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact modular matmul via a 16-bit split of the left factor.

    With entries reduced below 2^31 the partial products fit int64 for inner
    dimensions up to 2^15, which is far beyond any matrix built here.
    """
    k = a.shape[1]
    if k == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if k > (1 << 15):
        raise ValueError(f"inner dimension {k} too large for exact modular matmul")
    hi, lo = a >> 16, a & 0xFFFF
    return ((hi @ b % p) * ((1 << 16) % p) + lo @ b) % p


# -- rank / kernel / inverse ------------------------------------------------


def rank(m: ExactMatrix) -> int:
    """Exact rank via Gaussian elimination (Bareiss over the rationals)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.field.is_rational:
        return _rank_bareiss(m.data)
    work = m.data.copy()
    if m.field.char == MERSENNE31:
        return int(_rank_mersenne(work))
    return int(_rank_modp(work, m.field.char))


def is_max_rank(m: ExactMatrix) -> bool:
    """True iff rank equals min(rows, cols); vacuously true for empty shapes."""
    return rank(m) == min(m.rows, m.cols)


def _rank_bareiss(data: np.ndarray) -> int:
    # clear denominators row by row (does not change the row space), then
    # run fraction-free elimination with exact integer division
    rows = []
    for r in data.tolist():
        mult = lcm(*(f.denominator for f in r)) if r else 1
        rows.append([int(f * mult) for f in r])
    m, n = len(rows), len(rows[0])
    rank_ = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(rank_, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank_], rows[piv] = rows[piv], rows[rank_]
        pivval = rows[rank_][col]
        for i in range(rank_ + 1, m):
            fi = rows[i][col]
            row_i, row_p = rows[i], rows[rank_]
            for j in range(col, n):
                row_i[j] = (pivval * row_i[j] - fi * row_p[j]) // prev
        prev = pivval
        rank_ += 1
        if rank_ == m:
            break
    return rank_


def _rref_rational(data: np.ndarray) -> tuple[list[list[Fraction]], list[int]]:
    rows = [[Fraction(x) for x in r] for r in data.tolist()]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return rows, pivots


def kernel_basis(m: ExactMatrix) -> list[ExactMatrix]:
    """Basis of the right kernel, as a list of column vectors.

    The basis is the standard one read off the reduced row echelon form: one
    vector per free column, with a 1 in that coordinate.  m @ v == 0 for each.
    """
    n = m.cols
    if n == 0:
        return []
    if m.rows == 0:
        return [_unit_column(m.field, n, j) for j in range(n)]
    if m.field.is_rational:
        rows, pivots = _rref_rational(m.data)
    else:
        work = m.data.copy()
        pivot_arr = np.empty(min(m.rows, n), dtype=np.int64)
        r = int(_rref_modp(work, m.field.char, pivot_arr))
        rows, pivots = work, [int(c) for c in pivot_arr[:r]]
    pivot_set = set(pivots)
    basis = []
    for j in range(n):
        if j in pivot_set:
            continue
        v = ExactMatrix.zeros(m.field, n, 1)
        one = Fraction(1) if m.field.is_rational else 1
        v.data[j, 0] = one
        for i, pc in enumerate(pivots):
            entry = rows[i][j]
            if m.field.is_rational:
                v.data[pc, 0] = -entry
            else:
                v.data[pc, 0] = (m.field.char - int(entry)) % m.field.char
        basis.append(v)
    return basis


def _unit_column(field: FieldSpec, n: int, j: int) -> ExactMatrix:
    v = ExactMatrix.zeros(field, n, 1)
    v.data[j, 0] = Fraction(1) if field.is_rational else 1
    return v


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Inverse of a square matrix; raises ValueError if singular."""
    if m.rows != m.cols:
        raise ValueError(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return ExactMatrix.zeros(m.field, 0, 0)
    if m.field.is_rational:
        aug = np.concatenate([m.data, ExactMatrix.identity(m.field, n).data], axis=1)
        rows, pivots = _rref_rational(aug)
        if len(pivots) < n or pivots[-1] >= n:
            raise ValueError("matrix is singular")
        return ExactMatrix.from_rows(m.field, [r[n:] for r in rows])
    aug = np.concatenate([m.data, ExactMatrix.identity(m.field, n).data], axis=1)
    pivot_arr = np.empty(n, dtype=np.int64)
    r = int(_rref_modp(aug, m.field.char, pivot_arr))
    if r < n or int(pivot_arr[n - 1]) >= n:
        raise ValueError("matrix is singular")
    return ExactMatrix(m.field, aug[:, n:])


def random_matrix(rows: int, cols: int, field: FieldSpec,
                  rng: np.random.Generator, bound: int = 10 ** 6) -> ExactMatrix:
    """Entries i.i.d. uniform: over all of F_p, or over [-bound, bound] in Q."""
    if field.is_rational:
        vals = rng.integers(-bound, bound + 1, size=(rows, cols))
        data = np.empty((rows, cols), dtype=object)
        for i in range(rows):
            for j in range(cols):
                data[i, j] = Fraction(int(vals[i, j]))
        return ExactMatrix(field, data)
    return ExactMatrix(field, rng.integers(0, field.char, size=(rows, cols), dtype=np.int64))
