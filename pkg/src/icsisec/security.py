"""Eavesdropper analysis of linear broadcast schemes.

The adversary model: someone who already holds the messages indexed by a
set of strength t, observes every broadcast symbol, and wants information
about a disjoint block of messages. Because the broadcast is linear, the
adversary learns nothing about a block exactly when no codeword vanishes
outside its known set while touching the block; that is a rank condition
on generator columns and is the production decision path here.

The same question is also answered by brute force: enumerate every message
vector consistent with the observation and tally the conditional
distribution of the block. The two routes are implemented independently
(conditional_block_entropy never looks at ranks) so each can be checked
against the other, and all decisions are made on exact integer counts,
never on floating-point entropy values.

On top of the per-query test sit the aggregate results: measured and
distance-guaranteed block-security levels per strength, constructive
witnesses that break weak security one strength past the guarantee, the
candidate-list attack with its exact q^(n-t-k) size, and the full-recovery
attack that sets in at strength n - d_dual + 1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Optional

from .algebra import (
    DimensionMismatchError,
    FieldMismatchError,
    IndexOutOfRangeError,
    InconsistentSystemError,
    Matrix,
    Vector,
    solve,
    unit_vector,
)
from .code import LinearCode, TooLargeToEnumerateError, iterate_span
from .rng import Rng

EXHAUSTIVE_SWEEP_LIMIT = 14
ORACLE_SPACE_LIMIT = 1 << 20
LIST_LIMIT = 1 << 20


class SecurityError(Exception):
    """Base class for security-analysis failures."""


class InconsistentObservationError(SecurityError):
    """No message vector is consistent with the claimed observation."""


class ListTooLargeError(SecurityError):
    """The candidate list would exceed the enumeration limit."""


class RankDeficientError(SecurityError):
    """The unknown columns do not have full rank k, so the exact list-size
    guarantee lapses (the adversary is stronger than the guarantee covers)."""


@dataclass(frozen=True)
class SecurityQuery:
    """A partition question: known indices X_A, target block B, rest E."""

    n: int
    known: frozenset[int]
    block: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "known", frozenset(self.known))
        object.__setattr__(self, "block", frozenset(self.block))
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")
        if not self.block:
            raise ValueError("target block must be nonempty")
        for i in self.known | self.block:
            if not (isinstance(i, int) and 1 <= i <= self.n):
                raise ValueError(f"index {i!r} outside [1, {self.n}]")
        if self.known & self.block:
            raise ValueError(f"known and block overlap at {sorted(self.known & self.block)}")

    @property
    def strength(self) -> int:
        return len(self.known)

    @property
    def rest(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.known - self.block


@dataclass(frozen=True)
class AdversaryView:
    """Concrete observation: values for the known indices plus the broadcast."""

    known_values: tuple[tuple[int, int], ...]
    broadcast: Vector

    def __post_init__(self) -> None:
        pairs = tuple(sorted((int(i), int(v)) for i, v in self.known_values))
        object.__setattr__(self, "known_values", pairs)
        field = self.broadcast.field
        seen = set()
        for i, v in pairs:
            if i < 1:
                raise IndexOutOfRangeError(f"index {i} is not positive")
            if i in seen:
                raise ValueError(f"duplicate known index {i}")
            seen.add(i)
            field.check_value(v)

    @classmethod
    def of(cls, known: Mapping[int, int], broadcast: Vector) -> "AdversaryView":
        return cls(tuple(known.items()), broadcast)

    @property
    def known(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.known_values)

    @property
    def strength(self) -> int:
        return len(self.known_values)

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self.known_values)


def has_no_information(code: LinearCode, query: SecurityQuery) -> bool:
    """Whether the adversary learns nothing at all about the block.

    True iff no codeword vanishes on the rest set E while being nonzero
    somewhere on the block, decided algebraically: every generator column
    of the block must already lie in the span of the E columns, i.e.
    rank(G_E) = rank(G_{E u B}).
    """
    if query.n != code.length:
        raise DimensionMismatchError(f"query over n={query.n}, code length {code.length}")
    rest = query.rest
    return code.rank_of_columns(rest) == code.rank_of_columns(rest | query.block)


@dataclass(frozen=True)
class BlockEntropy:
    """Conditional distribution of the block given one observation."""

    bits: float
    uniform: bool
    counts: dict[tuple[int, ...], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def conditional_block_entropy(
    code: LinearCode,
    query: SecurityQuery,
    known_values: Mapping[int, int],
    broadcast: Vector,
) -> BlockEntropy:
    """Brute-force oracle for the same question has_no_information answers.

    Enumerates every message vector that matches the known values and the
    broadcast, tallies the values on the block, and reports the exact count
    table, a uniformity flag (all q^|B| tuples appear equally often), and
    the entropy in bits. Deliberately shares no machinery with the rank
    test.
    """
    n, k = code.length, code.dimension
    field = code.field
    q = field.q
    if query.n != n:
        raise DimensionMismatchError(f"query over n={query.n}, code length {code.length}")
    if q ** n > ORACLE_SPACE_LIMIT:
        raise TooLargeToEnumerateError(f"q^n = {q}^{n} exceeds {ORACLE_SPACE_LIMIT}")
    if frozenset(known_values) != query.known:
        raise ValueError("known values must cover exactly the query's known set")
    if broadcast.field != field:
        raise FieldMismatchError("broadcast lives in a different field")
    if len(broadcast) != k:
        raise DimensionMismatchError(f"broadcast has length {len(broadcast)}, expected {k}")

    gen = code.generator.entries
    columns = [tuple(gen[r][j] for r in range(k)) for j in range(n)]
    add, sub, mul = field.add, field.sub, field.mul

    current = [0] * k
    for i, v in known_values.items():
        field.check_value(v)
        if v:
            col = columns[i - 1]
            for r in range(k):
                if col[r]:
                    current[r] = add(current[r], mul(v, col[r]))

    free = sorted(query.block | query.rest)
    block_sorted = sorted(query.block)
    block_pos = [free.index(i) for i in block_sorted]
    target = list(broadcast.entries)

    counts: dict[tuple[int, ...], int] = {}
    assign = [0] * len(free)
    if current == target:
        counts[tuple(0 for _ in block_pos)] = 1
    while True:
        pos = 0
        while pos < len(free) and assign[pos] == q - 1:
            delta = sub(0, q - 1)
            col = columns[free[pos] - 1]
            for r in range(k):
                if col[r]:
                    current[r] = add(current[r], mul(delta, col[r]))
            assign[pos] = 0
            pos += 1
        if pos == len(free):
            break
        old = assign[pos]
        assign[pos] = old + 1
        delta = sub(old + 1, old)
        col = columns[free[pos] - 1]
        for r in range(k):
            if col[r]:
                current[r] = add(current[r], mul(delta, col[r]))
        if current == target:
            key = tuple(assign[p] for p in block_pos)
            counts[key] = counts.get(key, 0) + 1

    total = sum(counts.values())
    if total == 0:
        raise InconsistentObservationError("no message vector matches the observation")
    space = q ** len(block_sorted)
    uniform = len(counts) == space and len(set(counts.values())) == 1
    bits = math.log2(total) - sum(c * math.log2(c) for c in counts.values()) / total
    return BlockEntropy(bits=bits, uniform=uniform, counts=counts)


def block_security_level(code: LinearCode, strength: int) -> int:
    """Largest b such that every size-b block is fully hidden from every
    adversary of the given strength; 0 when even single messages leak.

    Exhaustive over all (known set, block) pairs, so guarded to n <= 14.
    Block security is monotone (a leaking block stays leaky inside any
    superset), which lets the scan stop at the first failing block size.
    """
    n = code.length
    if not 0 <= strength <= n - 1:
        raise ValueError(f"strength must be in [0, {n - 1}], got {strength}")
    if n > EXHAUSTIVE_SWEEP_LIMIT:
        raise TooLargeToEnumerateError(f"exhaustive sweep refused for n={n} > {EXHAUSTIVE_SWEEP_LIMIT}")
    universe = range(1, n + 1)
    full = frozenset(universe)
    for b in range(1, n - strength + 1):
        for known in itertools.combinations(universe, strength):
            known_set = frozenset(known)
            rest_pool = sorted(full - known_set)
            for block in itertools.combinations(rest_pool, b):
                block_set = frozenset(block)
                rest = full - known_set - block_set
                if code.rank_of_columns(rest) != code.rank_of_columns(rest | block_set):
                    return b - 1
    return n - strength


def distance_guarantees(code: LinearCode) -> dict[int, int]:
    """Distance-derived block-security floor per strength.

    A code of minimum distance d hides every block of d - 1 - t messages
    from every strength-t adversary, for t up to d - 2. Strengths beyond
    that get no guarantee and are absent from the map.
    """
    d = code.min_distance
    return {t: d - 1 - t for t in range(max(0, d - 1))}


@dataclass(frozen=True)
class WeakSecurityWitness:
    """A strength-t adversary that recovers one message exactly.

    Holding the values at `known`, it computes x_exposed as
    coefficients . s - combination . x_known.
    """

    known: frozenset[int]
    exposed: int
    combination: Vector
    coefficients: Vector


def weak_security_witness(code: LinearCode, strength: int) -> Optional[WeakSecurityWitness]:
    """Constructive break of weak security at the given strength.

    Takes the first codeword of weight strength + 1 in enumeration order,
    normalizes it by its last-support coefficient, and lets the adversary
    know all of the support except that last position. Returns None when no
    codeword of that exact weight exists, which is not a proof of security;
    use block_security_level for verdicts.
    """
    n = code.length
    if not 0 <= strength <= n - 1:
        raise ValueError(f"strength must be in [0, {n - 1}], got {strength}")
    field = code.field
    w = strength + 1
    for cw in code.codewords():
        if sum(1 for v in cw if v) != w:
            continue
        support = [j + 1 for j, v in enumerate(cw) if v]
        exposed = support[-1]
        scale = field.inv(cw[exposed - 1])
        normalized = tuple(field.mul(scale, v) for v in cw)
        u = Vector(field, normalized) - unit_vector(exposed, n, field)
        coefficients = Vector(field, tuple(normalized[p - 1] for p in code.pivot_columns))
        witness = WeakSecurityWitness(
            known=frozenset(support[:-1]),
            exposed=exposed,
            combination=u,
            coefficients=coefficients,
        )
        assert code.contains(u + unit_vector(exposed, n, field))
        return witness
    return None


def _checked_view(code: LinearCode, view: AdversaryView) -> dict[int, int]:
    known = view.mapping
    n = code.length
    for i in known:
        if not 1 <= i <= n:
            raise IndexOutOfRangeError(f"known index {i} outside [1, {n}]")
    if len(known) >= n:
        raise ValueError("adversary already holds every message")
    if view.broadcast.field != code.field:
        raise FieldMismatchError("broadcast lives in a different field")
    if len(view.broadcast) != code.dimension:
        raise DimensionMismatchError(
            f"broadcast has length {len(view.broadcast)}, expected {code.dimension}"
        )
    return known


def list_attack(code: LinearCode, view: AdversaryView) -> tuple[Vector, ...]:
    """Every message vector consistent with the adversary's observation.

    When the columns outside the known set have full rank k (guaranteed
    whenever the strength is at most d - 1) the list has exactly
    q^(n - t - k) entries and provably contains the real message vector.
    Entries come back sorted lexicographically.
    """
    known = _checked_view(code, view)
    n, k = code.length, code.dimension
    field = code.field
    q = field.q
    t = len(known)
    free = [j for j in range(1, n + 1) if j not in known]
    gen = code.generator.entries
    a_rows = tuple(tuple(gen[r][j - 1] for j in free) for r in range(k))
    sub, mul = field.sub, field.mul
    rhs = []
    for r in range(k):
        acc = view.broadcast.entries[r]
        for i, v in known.items():
            if v:
                acc = sub(acc, mul(gen[r][i - 1], v))
        rhs.append(acc)
    try:
        solution = solve(Matrix(field, a_rows), Vector(field, tuple(rhs)))
    except InconsistentSystemError as exc:
        raise InconsistentObservationError("observation matches no message vector") from exc
    rank = len(free) - len(solution.kernel)
    if rank < k:
        raise RankDeficientError(
            f"unknown columns have rank {rank} < k = {k}; adversary strength {t} "
            "exceeds what the exact-size guarantee covers"
        )
    if q ** len(solution.kernel) > LIST_LIMIT:
        raise ListTooLargeError(
            f"candidate list of q^{len(solution.kernel)} entries exceeds {LIST_LIMIT}"
        )
    add = field.add
    particular = solution.particular.entries
    candidates = []
    for combo in iterate_span(field, [v.entries for v in solution.kernel], width=len(free)):
        z = [0] * n
        for i, v in known.items():
            z[i - 1] = v
        for pos, j in enumerate(free):
            z[j - 1] = add(particular[pos], combo[pos])
        candidates.append(Vector(field, tuple(z)))
    candidates.sort(key=lambda v: v.entries)
    return tuple(candidates)


@dataclass(frozen=True)
class AttackOutcome:
    """Result of the per-index recovery attack."""

    recovered: tuple[tuple[int, int], ...]
    resisted: tuple[int, ...]

    @property
    def complete(self) -> bool:
        return not self.resisted

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self.recovered)


def complete_insecurity_attack(code: LinearCode, view: AdversaryView) -> AttackOutcome:
    """Recover every message the scheme fails to hide from this adversary.

    For each unknown index, looks for a codeword pinned to 1 there and
    otherwise supported on the known set; when one exists the message value
    follows exactly. At strength n - d_dual + 1 and above, every index is
    recovered for every choice of known set.
    """
    known = _checked_view(code, view)
    field = code.field
    sub, mul, add = field.sub, field.mul, field.add
    recovered = []
    resisted = []
    for i in sorted(j for j in range(1, code.length + 1) if j not in known):
        found = code.confined_combination(known.keys(), i)
        if found is None:
            resisted.append(i)
            continue
        y, c = found
        acc = 0
        for idx, v in known.items():
            acc = add(acc, mul(c.at(idx), v))
        recovered.append((i, sub(y.dot(view.broadcast), acc)))
    return AttackOutcome(tuple(recovered), tuple(resisted))


@dataclass(frozen=True)
class RecoveryCounterexample:
    """A known set whose recovery attack left some index unrecovered."""

    known: frozenset[int]
    resisted: int


@dataclass(frozen=True)
class StrengthVerdict:
    """Everything the report says about adversaries of one strength."""

    strength: int
    guaranteed_block_level: int
    measured_block_level: int
    weakly_secure: bool
    weak_witness: Optional[WeakSecurityWitness]
    completely_insecure: bool
    complete_counterexample: Optional[RecoveryCounterexample]


@dataclass(frozen=True)
class SecurityReport:
    """Per-strength security ladder of one code, plus its thresholds."""

    length: int
    dimension: int
    min_distance: int
    dual_distance: int
    insecurity_threshold: int
    mode: str
    seed: int
    strengths: tuple[StrengthVerdict, ...]


def _complete_insecurity_exhaustive(
    code: LinearCode, strength: int
) -> tuple[bool, Optional[RecoveryCounterexample]]:
    n = code.length
    for known in itertools.combinations(range(1, n + 1), strength):
        known_set = frozenset(known)
        for i in range(1, n + 1):
            if i in known_set:
                continue
            if code.confined_combination(known_set, i) is None:
                return False, RecoveryCounterexample(known=known_set, resisted=i)
    return True, None


def _sampled_level(code: LinearCode, strength: int, rng: Rng, samples: int) -> int:
    n = code.length
    universe = tuple(range(1, n + 1))
    full = frozenset(universe)
    for b in range(1, n - strength + 1):
        for _ in range(samples):
            known = frozenset(rng.subset(universe, strength))
            rest_pool = tuple(sorted(full - known))
            block = frozenset(rng.subset(rest_pool, b))
            rest = full - known - block
            if code.rank_of_columns(rest) != code.rank_of_columns(rest | block):
                return b - 1
    return n - strength


def _sampled_complete(
    code: LinearCode, strength: int, rng: Rng, samples: int
) -> tuple[bool, Optional[RecoveryCounterexample]]:
    n = code.length
    universe = tuple(range(1, n + 1))
    for _ in range(samples):
        known = frozenset(rng.subset(universe, strength))
        for i in sorted(set(universe) - known):
            if code.confined_combination(known, i) is None:
                return False, RecoveryCounterexample(known=known, resisted=i)
    return True, None


def security_report(
    code: LinearCode,
    *,
    sampled: bool = False,
    seed: int = 0,
    samples: int = 400,
    sweep_limit: int = EXHAUSTIVE_SWEEP_LIMIT,
) -> SecurityReport:
    """The full security ladder of a code, one verdict per strength.

    Exhaustive for n <= sweep_limit. Beyond that an exhaustive report is
    refused unless sampled=True, in which case verdicts rest on seeded
    random sweeps and the report is marked "sampled" (measured levels are
    then upper estimates, and witnesses are only searched when codeword
    enumeration fits the guard).
    """
    n = code.length
    d = code.min_distance
    dual_distance = code.dual_distance
    threshold = n - dual_distance + 1
    guarantees = distance_guarantees(code)
    if n > sweep_limit:
        if not sampled:
            raise TooLargeToEnumerateError(
                f"exhaustive report refused for n={n} > {sweep_limit}; request sampling"
            )
        mode = "sampled"
    else:
        mode = "exhaustive"
    rng = Rng(seed)
    verdicts = []
    for t in range(n):
        if mode == "exhaustive":
            measured = block_security_level(code, t)
            complete, counterexample = _complete_insecurity_exhaustive(code, t)
        else:
            measured = _sampled_level(code, t, rng, samples)
            complete, counterexample = _sampled_complete(code, t, rng, samples)
        try:
            witness = weak_security_witness(code, t)
        except TooLargeToEnumerateError:
            witness = None
        verdicts.append(
            StrengthVerdict(
                strength=t,
                guaranteed_block_level=guarantees.get(t, 0),
                measured_block_level=measured,
                weakly_secure=measured >= 1,
                weak_witness=witness,
                completely_insecure=complete,
                complete_counterexample=counterexample,
            )
        )
        if mode == "exhaustive":
            assert measured >= guarantees.get(t, 0)
            if t >= threshold:
                assert complete
    return SecurityReport(
        length=n,
        dimension=code.dimension,
        min_distance=d,
        dual_distance=dual_distance,
        insecurity_threshold=threshold,
        mode=mode,
        seed=seed,
        strengths=tuple(verdicts),
    )
