"""Linear [n, k] block codes over a finite field.

Distances and weight spectra come from explicit codeword enumeration behind
a q^k <= 2^24 guard; duals are nullspace bases; the orthogonal-array tuple
count and the systematic Reed-Solomon construction support the security
analysis layered on top.

A LinearCode normalizes whatever spanning rows it is given to the reduced
row echelon basis, so two equal row spaces always produce identical
generator matrices, byte for byte.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence, Union

from .algebra import (
    DimensionMismatchError,
    Field,
    FieldMismatchError,
    IndexOutOfRangeError,
    InconsistentSystemError,
    Matrix,
    Vector,
    _rank_raw,
    _rref_raw,
    solve,
)

MAX_ENUMERATION = 1 << 24
MAX_TUPLE_SPACE = 1 << 20


class CodeError(Exception):
    """Base class for code-level failures."""


class TooLargeToEnumerateError(CodeError):
    """An enumeration guard would be exceeded."""


class EmptyInputError(CodeError):
    """No rows were provided to build a code from."""


class ZeroCodeError(CodeError):
    """Every provided row is zero; the span has dimension 0."""


class FieldTooSmallError(CodeError):
    """The field has fewer elements than the construction needs."""


class ZeroDualError(CodeError):
    """A full code [n, n] has only the zero vector in its dual."""


def iterate_span(
    field: Field, rows: Sequence[Sequence[int]], width: Optional[int] = None
) -> Iterator[tuple[int, ...]]:
    """Yield every vector in the row span exactly once, starting from zero.

    Coefficient tuples run through canonical integer order (an odometer over
    base-q digits), and each step updates the running vector incrementally,
    so the cost per vector is O(n) regardless of q. The rows must be
    linearly independent for the "exactly once" claim. `width` pins the
    vector length when rows may be empty (the span is then just zero).
    """
    k = len(rows)
    if k == 0:
        yield (0,) * (width or 0)
        return
    n = len(rows[0])
    q = field.q
    add, mul, sub = field.add, field.mul, field.sub
    coeffs = [0] * k
    current = [0] * n
    yield tuple(current)
    while True:
        i = 0
        while i < k and coeffs[i] == q - 1:
            delta = sub(0, q - 1)
            row = rows[i]
            for j in range(n):
                if row[j]:
                    current[j] = add(current[j], mul(delta, row[j]))
            coeffs[i] = 0
            i += 1
        if i == k:
            return
        old = coeffs[i]
        coeffs[i] = old + 1
        delta = sub(old + 1, old)
        row = rows[i]
        for j in range(n):
            if row[j]:
                current[j] = add(current[j], mul(delta, row[j]))
        yield tuple(current)


class LinearCode:
    """A linear code with a canonical (reduced row echelon) generator matrix."""

    def __init__(self, generator: Matrix):
        rows, pivots = _rref_raw(generator.field, generator.entries)
        if not pivots:
            raise ZeroCodeError("all rows are zero")
        self.field = generator.field
        self.generator = Matrix(self.field, tuple(tuple(rows[i]) for i in range(len(pivots))))
        self.pivot_columns = tuple(c + 1 for c in pivots)
        self._rank_cache: dict[frozenset[int], int] = {}

    @classmethod
    def from_rows(cls, rows: Sequence[Vector]) -> "LinearCode":
        if not rows:
            raise EmptyInputError("need at least one row")
        return cls(Matrix.from_rows(rows))

    @property
    def length(self) -> int:
        return self.generator.ncols

    @property
    def dimension(self) -> int:
        return self.generator.nrows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.field == other.field and self.generator.entries == other.generator.entries

    def __hash__(self) -> int:
        return hash((self.field, self.generator.entries))

    def __repr__(self) -> str:
        return f"LinearCode(n={self.length}, k={self.dimension}, q={self.field.q})"

    def _check_enumerable(self, dimension: int) -> None:
        if self.field.q ** dimension > MAX_ENUMERATION:
            raise TooLargeToEnumerateError(
                f"q^k = {self.field.q}^{dimension} codewords exceed {MAX_ENUMERATION}"
            )

    def codewords(self) -> Iterator[tuple[int, ...]]:
        """All q^k codewords as raw entry tuples, in deterministic order."""
        self._check_enumerable(self.dimension)
        return iterate_span(self.field, self.generator.entries)

    @cached_property
    def weight_distribution(self) -> tuple[int, ...]:
        """counts[w] = number of codewords of Hamming weight w, w = 0..n."""
        counts = [0] * (self.length + 1)
        for cw in self.codewords():
            counts[sum(1 for v in cw if v)] += 1
        return tuple(counts)

    @cached_property
    def min_distance(self) -> int:
        """Minimum weight of a nonzero codeword (equals minimum distance)."""
        wd = self.weight_distribution
        for w in range(1, self.length + 1):
            if wd[w]:
                return w
        raise ZeroCodeError("no nonzero codeword found")

    @cached_property
    def dual(self) -> "LinearCode":
        """The [n, n-k] dual code; undefined (zero) when k = n."""
        if self.dimension == self.length:
            raise ZeroDualError("dual of a full [n, n] code is the zero code")
        kernel = solve(self.generator, Vector.zero(self.field, self.dimension)).kernel
        return LinearCode.from_rows(list(kernel))

    @cached_property
    def dual_distance(self) -> int:
        """Minimum distance of the dual; n + 1 by convention when k = n."""
        if self.dimension == self.length:
            return self.length + 1
        return self.dual.min_distance

    @property
    def is_mds(self) -> bool:
        """Whether the Singleton bound d <= n - k + 1 is met with equality."""
        return self.min_distance == self.length - self.dimension + 1

    def contains(self, vector: Vector) -> bool:
        """Membership test by reduction against the canonical generator rows."""
        if vector.field != self.field:
            raise FieldMismatchError("vector lives in a different field")
        if len(vector) != self.length:
            raise DimensionMismatchError(f"expected length {self.length}, got {len(vector)}")
        sub, mul = self.field.sub, self.field.mul
        w = list(vector.entries)
        for row, pc in zip(self.generator.entries, self.pivot_columns):
            c = w[pc - 1]
            if c:
                for j in range(self.length):
                    if row[j]:
                        w[j] = sub(w[j], mul(c, row[j]))
        return not any(w)

    def rank_of_columns(self, positions: Iterable[int]) -> int:
        """Rank of the generator submatrix on the given 1-based columns.

        Memoized per column set; the security sweeps ask for heavily
        overlapping sets, so this turns a 3^n-query sweep into at most 2^n
        eliminations.
        """
        key = frozenset(positions)
        cached = self._rank_cache.get(key)
        if cached is not None:
            return cached
        for j in key:
            if not 1 <= j <= self.length:
                raise IndexOutOfRangeError(f"column {j} outside [1, {self.length}]")
        if not key:
            rank = 0
        else:
            cols = sorted(key)
            rank = _rank_raw(
                self.field,
                [[row[j - 1] for j in cols] for row in self.generator.entries],
            )
        self._rank_cache[key] = rank
        return rank

    def confined_combination(
        self, allowed: Iterable[int], position: int
    ) -> Optional[tuple[Vector, Vector]]:
        """A codeword pinned to 1 at `position` and supported inside `allowed`.

        Returns (y, c) with c = y G, c at `position` equal to 1, and every
        other nonzero coordinate of c inside the allowed set; None when no
        such codeword exists. Decided by one linear solve, no enumeration.
        """
        n, k = self.length, self.dimension
        if not 1 <= position <= n:
            raise IndexOutOfRangeError(f"position {position} outside [1, {n}]")
        allowed_set = set(allowed) - {position}
        for j in allowed_set:
            if not 1 <= j <= n:
                raise IndexOutOfRangeError(f"position {j} outside [1, {n}]")
        gen = self.generator.entries
        constraint_cols = [j for j in range(1, n + 1) if j != position and j not in allowed_set]
        constraint_cols.append(position)
        a_rows = tuple(tuple(gen[r][j - 1] for r in range(k)) for j in constraint_cols)
        rhs = Vector(self.field, (0,) * (len(constraint_cols) - 1) + (1,))
        try:
            solution = solve(Matrix(self.field, a_rows), rhs)
        except InconsistentSystemError:
            return None
        y = solution.particular
        return y, self.generator.left_times(y)


def oa_tuple_counts(code: LinearCode, positions: Iterable[int]) -> dict[tuple[int, ...], int]:
    """How often each value tuple appears at the given columns of the code.

    Counts over all q^k codewords, keyed by the values at the requested
    1-based columns in ascending order; tuples that never appear are
    present with count 0.
    """
    cols = sorted(set(positions))
    if not cols:
        raise ValueError("need at least one column position")
    for j in cols:
        if not 1 <= j <= code.length:
            raise IndexOutOfRangeError(f"column {j} outside [1, {code.length}]")
    q = code.field.q
    if q ** len(cols) > MAX_TUPLE_SPACE:
        raise TooLargeToEnumerateError(
            f"q^r = {q}^{len(cols)} value tuples exceed {MAX_TUPLE_SPACE}"
        )
    counts: dict[tuple[int, ...], int] = {
        t: 0 for t in itertools.product(range(q), repeat=len(cols))
    }
    idx = [j - 1 for j in cols]
    for cw in code.codewords():
        counts[tuple(cw[i] for i in idx)] += 1
    return counts


def reed_solomon_code(length: int, dimension: int, field: Field) -> LinearCode:
    """Systematic MDS code from polynomial evaluation.

    Row i of the raw generator evaluates the monomial X^i at the first
    `length` field elements in canonical integer order; normalization to
    the reduced row echelon basis then yields the systematic form, since
    any k columns of the evaluation matrix are independent. The result has
    d = n - k + 1 and dual distance k + 1.
    """
    if not 1 <= dimension <= length:
        raise ValueError(f"need 1 <= k <= n, got k={dimension}, n={length}")
    if field.q < length:
        raise FieldTooSmallError(
            f"need q >= n distinct evaluation points, got q={field.q} < n={length}"
        )
    points = range(length)
    rows = [
        Vector(field, tuple(field.power(a, i) for a in points))
        for i in range(dimension)
    ]
    return LinearCode.from_rows(rows)
