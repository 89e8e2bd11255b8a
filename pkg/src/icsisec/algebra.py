"""Exact arithmetic in F_q and the linear algebra built on top of it.

Field elements are canonical integers in [0, q): the base-p digits of the
integer are the coefficients of the polynomial basis representation, so for
prime fields the integer is just the residue. Prime fields compute with
modular arithmetic; extension fields are built once per (p, m, polynomial)
and afterwards multiply through log/antilog tables, which keeps every
operation exact. Field order is capped at 65536.

Index convention: every public index argument or result (supports, pivot
columns, unit-vector positions, column selections) is 1-based, matching the
usual [n] = {1, ..., n} notation of the domain. Raw entry tuples remain
ordinary 0-based Python sequences.

Everything in this module is immutable after construction; operations are
pure functions, so sharing objects between workers is safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

MAX_FIELD_ORDER = 65536


class AlgebraError(Exception):
    """Base class for every algebra-level failure."""


class NotPrimeError(AlgebraError):
    """The requested field characteristic is not a prime number."""


class ReduciblePolynomialError(AlgebraError):
    """The proposed reduction polynomial has a nontrivial factor."""


class FieldTooLargeError(AlgebraError):
    """The requested field order exceeds MAX_FIELD_ORDER."""


class FieldMismatchError(AlgebraError):
    """Operands belong to different fields."""


class DimensionMismatchError(AlgebraError):
    """Operand shapes are incompatible."""


class IndexOutOfRangeError(AlgebraError):
    """A 1-based position falls outside [1, n]."""


class InconsistentSystemError(AlgebraError):
    """The linear system has no solution."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _undigits(digits: Sequence[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo b over F_p; b must be monic."""
    r = list(a)
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return r[:db]


def _poly_is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree up to deg(poly)/2."""
    m = len(poly) - 1
    for deg in range(1, m // 2 + 1):
        for code in range(p ** deg):
            divisor = _digits(code, p, deg) + [1]
            if not any(_poly_rem(poly, divisor, p)):
                return False
    return True


def _least_irreducible(p: int, m: int) -> tuple[int, ...]:
    """First monic irreducible of degree m in canonical coefficient order."""
    for code in range(p ** m):
        poly = _digits(code, p, m) + [1]
        if _poly_is_irreducible(poly, p):
            return tuple(poly)
    raise AlgebraError(f"no irreducible polynomial of degree {m} over F_{p}")


class Field:
    """The finite field with q = p^m elements.

    Elements are canonical integers in [0, q). For m > 1 a monic reduction
    polynomial of degree m is required; when none is supplied the first
    irreducible polynomial in canonical coefficient order is used, so two
    fields built with the same (p, m) always agree element by element.
    Irreducibility is verified at construction by trial division.

    Construction of an extension field costs O(q) to fill the log/antilog
    tables; every later product or inverse is a pair of table lookups.
    Fields compare equal iff (p, m, polynomial) coincide.
    """

    __slots__ = ("p", "m", "q", "poly", "_exp", "_log")

    def __init__(self, p: int, m: int = 1, poly: Optional[Sequence[int]] = None):
        if not _is_prime(p):
            raise NotPrimeError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be at least 1, got {m}")
        q = p ** m
        if q > MAX_FIELD_ORDER:
            raise FieldTooLargeError(f"q = {p}^{m} = {q} exceeds {MAX_FIELD_ORDER}")
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            if poly is not None:
                raise ValueError("reduction polynomial applies only to extension fields (m > 1)")
            self.poly: Optional[tuple[int, ...]] = None
            self._exp: Optional[list[int]] = None
            self._log: Optional[list[int]] = None
        else:
            if poly is None:
                coeffs = _least_irreducible(p, m)
            else:
                coeffs = tuple(int(c) % p for c in poly)
                if len(coeffs) != m + 1 or coeffs[m] != 1:
                    raise ValueError(f"reduction polynomial must be monic of degree {m}")
                if not _poly_is_irreducible(coeffs, p):
                    raise ReduciblePolynomialError(
                        f"polynomial {list(coeffs)} factors over F_{p}"
                    )
            self.poly = coeffs
            self._build_tables()

    def _mul_raw(self, a: int, b: int) -> int:
        # Polynomial product mod the reduction polynomial; table-free, used
        # only while the tables themselves are being built.
        p, m = self.p, self.m
        da = _digits(a, p, m)
        db = _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        poly = self.poly
        assert poly is not None
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                for j in range(m + 1):
                    prod[i - m + j] = (prod[i - m + j] - c * poly[j]) % p
        return _undigits(prod[:m], p)

    def _build_tables(self) -> None:
        # The reduction polynomial need not be primitive, so search the
        # elements in canonical order for a multiplicative generator.
        q = self.q
        exp: list[int] = []
        for g in range(2, q):
            exp = [1]
            v = g
            while v != 1 and len(exp) < q:
                exp.append(v)
                v = self._mul_raw(v, g)
            if len(exp) == q - 1:
                break
        else:
            raise AlgebraError("multiplicative group has no generator; not a field")
        log = [0] * q
        for i, val in enumerate(exp):
            log[val] = i
        self._exp = exp
        self._log = log

    # -- scalar arithmetic on canonical integers --

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        scale = 1
        for _ in range(self.m):
            out += ((a + b) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        out = 0
        scale = 1
        for _ in range(self.m):
            out += ((-a) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        assert self._exp is not None and self._log is not None
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        assert self._exp is not None and self._log is not None
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        """a raised to a nonnegative integer exponent, with 0^0 = 1."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if self.m == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        assert self._exp is not None and self._log is not None
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def check_value(self, value: int) -> int:
        if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < self.q:
            raise ValueError(f"{value!r} is not a canonical element of {self!r}")
        return value

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def elements(self) -> range:
        """All canonical values, in canonical integer order."""
        return range(self.q)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return self.p == other.p and self.m == other.m and self.poly == other.poly

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.poly))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"Field({self.p})"
        return f"Field({self.p}, {self.m})"


@dataclass(frozen=True)
class FieldElement:
    """A single field value bound to its field; cross-field arithmetic is rejected."""

    field: Field
    value: int

    def __post_init__(self) -> None:
        self.field.check_value(self.value)

    def _peer(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError("operands live in different fields")
        return other

    def __add__(self, other: "FieldElement") -> "FieldElement":
        other = self._peer(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        other = self._peer(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        other = self._peer(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        other = self._peer(other)
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def __bool__(self) -> bool:
        return self.value != 0


@dataclass(frozen=True)
class Vector:
    """Fixed-length vector over one field, entries stored as canonical integers."""

    field: Field
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        for v in self.entries:
            self.field.check_value(v)

    @classmethod
    def zero(cls, field: Field, length: int) -> "Vector":
        return cls(field, (0,) * length)

    def __len__(self) -> int:
        return len(self.entries)

    def _peer(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            raise TypeError(f"expected Vector, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError("vectors live in different fields")
        if len(other) != len(self):
            raise DimensionMismatchError(f"lengths differ: {len(self)} vs {len(other)}")
        return other

    def __add__(self, other: "Vector") -> "Vector":
        other = self._peer(other)
        add = self.field.add
        return Vector(self.field, tuple(add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Vector") -> "Vector":
        other = self._peer(other)
        sub = self.field.sub
        return Vector(self.field, tuple(sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Vector":
        neg = self.field.neg
        return Vector(self.field, tuple(neg(a) for a in self.entries))

    def scaled(self, coefficient: int) -> "Vector":
        self.field.check_value(coefficient)
        mul = self.field.mul
        return Vector(self.field, tuple(mul(coefficient, a) for a in self.entries))

    def dot(self, other: "Vector") -> int:
        other = self._peer(other)
        add, mul = self.field.add, self.field.mul
        acc = 0
        for a, b in zip(self.entries, other.entries):
            acc = add(acc, mul(a, b))
        return acc

    @property
    def weight(self) -> int:
        """Number of nonzero entries (Hamming weight)."""
        return sum(1 for v in self.entries if v)

    def support(self) -> frozenset[int]:
        """1-based positions of the nonzero entries."""
        return frozenset(i + 1 for i, v in enumerate(self.entries) if v)

    def distance(self, other: "Vector") -> int:
        other = self._peer(other)
        return sum(1 for a, b in zip(self.entries, other.entries) if a != b)

    def at(self, position: int) -> int:
        """Entry at a 1-based position."""
        if not 1 <= position <= len(self.entries):
            raise IndexOutOfRangeError(f"position {position} outside [1, {len(self.entries)}]")
        return self.entries[position - 1]

    def take(self, positions: Iterable[int]) -> tuple[int, ...]:
        """Entries at the given 1-based positions, in ascending position order."""
        return tuple(self.at(i) for i in sorted(set(positions)))


def unit_vector(position: int, length: int, field: Field) -> Vector:
    """The standard basis vector e_position of the given length, 1-based."""
    if not 1 <= position <= length:
        raise IndexOutOfRangeError(f"position {position} outside [1, {length}]")
    return Vector(field, tuple(1 if i == position - 1 else 0 for i in range(length)))


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix over one field."""

    field: Field
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise DimensionMismatchError("rows have unequal lengths")
            for v in r:
                self.field.check_value(v)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Vector]) -> "Matrix":
        if not rows:
            raise ValueError("need at least one row vector")
        field = rows[0].field
        for v in rows:
            if v.field != field:
                raise FieldMismatchError("rows live in different fields")
        return cls(field, tuple(v.entries for v in rows))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def row(self, i: int) -> Vector:
        if not 1 <= i <= self.nrows:
            raise IndexOutOfRangeError(f"row {i} outside [1, {self.nrows}]")
        return Vector(self.field, self.entries[i - 1])

    def column(self, j: int) -> Vector:
        if not 1 <= j <= self.ncols:
            raise IndexOutOfRangeError(f"column {j} outside [1, {self.ncols}]")
        return Vector(self.field, tuple(r[j - 1] for r in self.entries))

    def columns(self, positions: Iterable[int]) -> "Matrix":
        """Submatrix keeping the given 1-based columns, in ascending order."""
        cols = sorted(set(positions))
        if not cols:
            raise ValueError("need at least one column position")
        for j in cols:
            if not 1 <= j <= self.ncols:
                raise IndexOutOfRangeError(f"column {j} outside [1, {self.ncols}]")
        return Matrix(self.field, tuple(tuple(r[j - 1] for j in cols) for r in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.entries)))

    def times_col(self, x: Vector) -> Vector:
        """M x^T as a vector of length nrows."""
        if x.field != self.field:
            raise FieldMismatchError("vector lives in a different field")
        if len(x) != self.ncols:
            raise DimensionMismatchError(f"expected length {self.ncols}, got {len(x)}")
        add, mul = self.field.add, self.field.mul
        out = []
        for row in self.entries:
            acc = 0
            for a, b in zip(row, x.entries):
                acc = add(acc, mul(a, b))
            out.append(acc)
        return Vector(self.field, tuple(out))

    def left_times(self, y: Union[Vector, Sequence[int]]) -> Vector:
        """y M as a vector of length ncols."""
        coeffs = y.entries if isinstance(y, Vector) else tuple(y)
        if isinstance(y, Vector) and y.field != self.field:
            raise FieldMismatchError("vector lives in a different field")
        if len(coeffs) != self.nrows:
            raise DimensionMismatchError(f"expected length {self.nrows}, got {len(coeffs)}")
        add, mul = self.field.add, self.field.mul
        out = [0] * self.ncols
        for c, row in zip(coeffs, self.entries):
            if c:
                for j, rv in enumerate(row):
                    out[j] = add(out[j], mul(c, rv))
        return Vector(self.field, tuple(out))


def _rref_raw(field: Field, rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form on raw entry lists.

    Deterministic pivoting: for each column left to right, the topmost
    unused row with a nonzero entry becomes the pivot; pivots are
    normalized to 1 and eliminated above and below. Returns the reduced
    rows and the 0-based pivot column list.
    """
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    sub, mul, inv = field.sub, field.mul, field.inv
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        pivot = mat[r][c]
        if pivot != 1:
            piv_inv = inv(pivot)
            mat[r] = [mul(piv_inv, v) for v in mat[r]]
        prow = mat[r]
        for i in range(nrows):
            if i != r and mat[i][c]:
                coef = mat[i][c]
                row = mat[i]
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] = sub(row[j], mul(coef, prow[j]))
        pivots.append(c)
        r += 1
    return mat, pivots


def _rank_raw(field: Field, rows: Sequence[Sequence[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(_rref_raw(field, rows)[1])


@dataclass(frozen=True)
class RrefResult:
    """Reduced row echelon form with rank and 1-based pivot columns."""

    matrix: Matrix
    rank: int
    pivots: tuple[int, ...]


def rref(matrix: Matrix) -> RrefResult:
    rows, pivots = _rref_raw(matrix.field, matrix.entries)
    reduced = Matrix(matrix.field, tuple(tuple(r) for r in rows))
    return RrefResult(reduced, len(pivots), tuple(c + 1 for c in pivots))


@dataclass(frozen=True)
class LinearSolution:
    """One solution of A y^T = b^T together with a basis of the kernel of A.

    The particular solution is the canonical one with every free variable
    set to zero; the full solution set is particular plus the span of the
    kernel basis, q^len(kernel) vectors in total.
    """

    particular: Vector
    kernel: tuple[Vector, ...]

    @property
    def count(self) -> int:
        return self.particular.field.q ** len(self.kernel)


def solve(matrix: Matrix, rhs: Vector) -> LinearSolution:
    """Solve A y^T = b^T for the row vector y; raises when inconsistent."""
    if rhs.field != matrix.field:
        raise FieldMismatchError("right-hand side lives in a different field")
    if len(rhs) != matrix.nrows:
        raise DimensionMismatchError(f"expected length {matrix.nrows}, got {len(rhs)}")
    field = matrix.field
    ncols = matrix.ncols
    aug = [list(row) + [b] for row, b in zip(matrix.entries, rhs.entries)]
    reduced, pivots = _rref_raw(field, aug)
    if pivots and pivots[-1] == ncols:
        raise InconsistentSystemError("no solution exists")
    particular = [0] * ncols
    for r, c in enumerate(pivots):
        particular[c] = reduced[r][ncols]
    pivot_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for r, c in enumerate(pivots):
            vec[c] = field.neg(reduced[r][free])
        kernel.append(Vector(field, tuple(vec)))
    return LinearSolution(Vector(field, tuple(particular)), tuple(kernel))


def column_span_contains(columns: Matrix, vector: Vector) -> bool:
    """Whether the vector lies in the span of the matrix columns.

    Decided by comparing rank(columns) with rank(columns | vector).
    """
    if vector.field != columns.field:
        raise FieldMismatchError("vector lives in a different field")
    if len(vector) != columns.nrows:
        raise DimensionMismatchError(f"expected length {columns.nrows}, got {len(vector)}")
    field = columns.field
    base = _rank_raw(field, columns.entries)
    augmented = [list(row) + [v] for row, v in zip(columns.entries, vector.entries)]
    return base == _rank_raw(field, augmented)
