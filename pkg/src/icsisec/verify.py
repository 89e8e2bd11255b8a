"""Property suites that re-check the library's claims at desk scale.

Five suites, named after the facts they exercise (the CLI exposes the
names thm1 .. thm4 and lemma3):

  thm1    singleton bound, MDS consistency, and per-code distance claims
  thm2    orthogonal-array counts in every <= d_dual - 1 column set
  lemma3  algebraic no-information test against the enumeration oracle
  thm3    distance-derived security floors, weight witnesses, list attacks
  thm4    guaranteed full recovery at strength n - d_dual + 1

Suites run against a built-in corpus (three named codes plus 50 seeded
random ones) and stop at the first failing case, so a reported failure is
the smallest one in a fixed scan order. Extra corpus entries can be
appended from a file; claim checking in thm1 then doubles as a harness
self-test, since a corrupted generator entry must surface as a failure.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .algebra import Field, Matrix, Vector
from .code import (
    EmptyInputError,
    LinearCode,
    MAX_TUPLE_SPACE,
    ZeroCodeError,
    oa_tuple_counts,
    reed_solomon_code,
)
from .icsi import (
    IcsiInstance,
    MalformedInstanceError,
    build_scheme,
    default_choice_vectors,
)
from .rng import Rng
from .security import (
    AdversaryView,
    ListTooLargeError,
    RankDeficientError,
    SecurityQuery,
    block_security_level,
    complete_insecurity_attack,
    conditional_block_entropy,
    has_no_information,
    list_attack,
    weak_security_witness,
)

RANDOM_CORPUS_SIZE = 50
RANDOM_CORPUS_WORDS = 4096


@dataclass(frozen=True)
class CorpusEntry:
    """A code under test, optionally with externally claimed parameters."""

    name: str
    code: LinearCode
    claims: dict


@dataclass(frozen=True)
class SuiteResult:
    name: str
    label: str
    cases: int
    failures: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def example_scheme():
    """The seven-receiver demonstration instance whose broadcast code is the
    [7, 4] Hamming code, under the indicator choice policy."""
    field = Field(2)
    sides = ({6, 7}, {5, 7}, {5, 6}, {5, 6, 7}, {1, 2, 6}, {1, 3, 4}, {2, 3, 6})
    instance = IcsiInstance(
        field, 7, tuple(frozenset(s) for s in sides), (1, 2, 3, 4, 5, 6, 7)
    )
    return build_scheme(instance, default_choice_vectors(instance, "indicator"))


def builtin_corpus(seed: int = 0) -> tuple[CorpusEntry, ...]:
    """Three named codes with claimed parameters, plus seeded random codes
    over F_2, F_3, F_4 with n <= 8 and at most 4096 codewords each."""
    f2 = Field(2)
    entries = [
        CorpusEntry(
            "repetition3",
            LinearCode.from_rows([Vector(f2, (1, 1, 1))]),
            {"d": 3, "d_dual": 2},
        ),
        CorpusEntry("hamming7", example_scheme().code, {"d": 3, "d_dual": 4}),
        CorpusEntry("rs7_3", reed_solomon_code(7, 3, Field(2, 3)), {"d": 5, "d_dual": 4}),
    ]
    rng = Rng(seed)
    fields = (f2, Field(3), Field(2, 2))
    count = 0
    while count < RANDOM_CORPUS_SIZE:
        field = fields[rng.below(len(fields))]
        n = 3 + rng.below(6)
        k = 1 + rng.below(n)
        if field.q ** k > RANDOM_CORPUS_WORDS:
            continue
        rows = tuple(tuple(rng.below(field.q) for _ in range(n)) for _ in range(k))
        try:
            code = LinearCode(Matrix(field, rows))
        except ZeroCodeError:
            continue
        count += 1
        entries.append(CorpusEntry(f"random{count:02d}", code, {}))
    return tuple(entries)


def load_corpus(path: str) -> tuple[CorpusEntry, ...]:
    """Extra corpus entries from a JSON file:

    {"codes": [{"name": ..., "field": {"p": ..., "m": ..., "poly": ...},
                "generator": [[...], ...], "claims": {"d": ..., "d_dual": ...}}]}
    """
    from .fileio import _parse_field, _require_keys

    with open(path, "r", encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise MalformedInstanceError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise MalformedInstanceError("corpus document must be a JSON object")
    _require_keys(doc, {"codes"}, {"codes"}, "corpus")
    entries = []
    for i, item in enumerate(doc["codes"], start=1):
        _require_keys(item, {"name", "field", "generator", "claims"}, {"name", "field", "generator"}, f"corpus code {i}")
        field = _parse_field(item["field"])
        rows = tuple(tuple(v for v in row) for row in item["generator"])
        code = LinearCode(Matrix(field, rows))
        claims = item.get("claims", {})
        if not isinstance(claims, dict) or set(claims) - {"d", "d_dual"}:
            raise MalformedInstanceError(f"corpus code {i}: claims may set only d and d_dual")
        entries.append(CorpusEntry(str(item["name"]), code, dict(claims)))
    return tuple(entries)


def _broadcast(code: LinearCode, x: tuple[int, ...]) -> Vector:
    return code.generator.times_col(Vector(code.field, x))


def _suite_singleton(seed: int, corpus: tuple[CorpusEntry, ...]) -> SuiteResult:
    cases = 0
    for entry in corpus:
        code = entry.code
        n, k = code.length, code.dimension
        d = code.min_distance
        cases += 1
        if d > n - k + 1:
            return _done("thm1", cases, {
                "code": entry.name, "check": "singleton", "n": n, "k": k, "d": d,
            })
        cases += 1
        if code.is_mds != (d == n - k + 1):
            return _done("thm1", cases, {
                "code": entry.name, "check": "mds_flag", "n": n, "k": k, "d": d,
            })
        measured = {"d": d, "d_dual": code.dual_distance}
        for key, claimed in sorted(entry.claims.items()):
            cases += 1
            if measured[key] != claimed:
                return _done("thm1", cases, {
                    "code": entry.name, "check": "claim", "parameter": key,
                    "claimed": claimed, "measured": measured[key],
                })
    return _done("thm1", cases, None)


def _suite_orthogonal_array(seed: int, corpus: tuple[CorpusEntry, ...]) -> SuiteResult:
    cases = 0
    for entry in corpus:
        code = entry.code
        n, k, q = code.length, code.dimension, code.field.q
        strength = code.dual_distance - 1
        for r in range(1, min(strength, n) + 1):
            if q ** r > MAX_TUPLE_SPACE:
                break
            expected = q ** (k - r)
            for positions in itertools.combinations(range(1, n + 1), r):
                counts = oa_tuple_counts(code, positions)
                cases += 1
                bad = next((t for t, c in sorted(counts.items()) if c != expected), None)
                if bad is not None:
                    return _done("thm2", cases, {
                        "code": entry.name, "columns": list(positions),
                        "tuple": list(bad), "count": counts[bad], "expected": expected,
                    })
    return _done("thm2", cases, None)


def _all_queries(n: int) -> list[tuple[frozenset[int], frozenset[int]]]:
    queries = []
    for assignment in itertools.product((0, 1, 2), repeat=n):
        block = frozenset(i + 1 for i, a in enumerate(assignment) if a == 1)
        if not block:
            continue
        known = frozenset(i + 1 for i, a in enumerate(assignment) if a == 0)
        queries.append((known, block))
    return queries


def _routes_disagree(code: LinearCode, known, block, observations, failures_out) -> bool:
    """Compare the rank test against the oracle on every given observation.
    Appends one failure dict and returns True at the first disagreement."""
    n = code.length
    query = SecurityQuery(n, known, block)
    algebraic = has_no_information(code, query)
    oracle = True
    for x, s in observations:
        entropy = conditional_block_entropy(
            code, query, {i: x[i - 1] for i in known}, s
        )
        if len(set(entropy.counts.values())) != 1:
            failures_out.append({
                "check": "unequal_counts", "generator": [list(r) for r in code.generator.entries],
                "known": sorted(known), "block": sorted(block), "x": list(x),
            })
            return True
        if not entropy.uniform:
            oracle = False
            break
    if algebraic != oracle:
        failures_out.append({
            "check": "routes_disagree", "generator": [list(r) for r in code.generator.entries],
            "field": {"p": code.field.p, "m": code.field.m},
            "known": sorted(known), "block": sorted(block),
            "algebraic": algebraic, "oracle": oracle,
        })
        return True
    return False


def _suite_oracle_equivalence(seed: int, corpus: tuple[CorpusEntry, ...]) -> SuiteResult:
    cases = 0
    failures: list[dict] = []
    f2 = Field(2)

    # Exhaustive half: every instance with n <= 4 and up to 3 receivers over
    # F_2, under both default policies. Distinct instances overwhelmingly
    # share their broadcast code, so dedupe first on the row set and then on
    # the reduced generator, and sweep each distinct code once against all
    # queries and all message vectors.
    for n in range(1, 5):
        receiver_rows: dict[str, list] = {"indicator": [], "zero": []}
        for f in range(1, n + 1):
            for mask in range(1 << n):
                if mask >> (f - 1) & 1:
                    receiver_rows["indicator"].append(None)
                    receiver_rows["zero"].append(None)
                else:
                    receiver_rows["indicator"].append(mask | 1 << (f - 1))
                    receiver_rows["zero"].append(1 << (f - 1))
        choice_count = n << n
        queries = _all_queries(n)
        seen_rowsets: set[frozenset[int]] = set()
        swept_codes: set[tuple] = set()
        for m in range(1, 4):
            for combo in itertools.product(range(choice_count), repeat=m):
                for rows in (receiver_rows["indicator"], receiver_rows["zero"]):
                    masks = frozenset(
                        rows[i] for i in combo if rows[i] is not None
                    )
                    if not masks or masks in seen_rowsets:
                        continue
                    seen_rowsets.add(masks)
                    code = LinearCode.from_rows([
                        Vector(f2, tuple(mask >> j & 1 for j in range(n)))
                        for mask in sorted(masks)
                    ])
                    key = code.generator.entries
                    if key in swept_codes:
                        continue
                    swept_codes.add(key)
                    observations = [
                        (x, _broadcast(code, x))
                        for x in itertools.product((0, 1), repeat=n)
                    ]
                    for known, block in queries:
                        cases += 1
                        if _routes_disagree(code, known, block, observations, failures):
                            return _done("lemma3", cases, failures[0])

    # Random half: seeded instances with n in {5, 6} over F_2 and F_3,
    # mixing default policies with random confined choice vectors; one
    # seeded observation per query suffices because the conditional count
    # table of a linear scheme is translation invariant.
    rng = Rng(seed)
    fields = (f2, Field(3))
    for _ in range(1000):
        field = fields[rng.below(2)]
        q = field.q
        n = 5 + rng.below(2)
        universe = tuple(range(1, n + 1))
        m = 1 + rng.below(4)
        while True:
            sides = tuple(
                frozenset(rng.subset(universe, rng.below(n))) for _ in range(m)
            )
            demands = tuple(1 + rng.below(n) for _ in range(m))
            instance = IcsiInstance(field, n, sides, demands)
            mode = ("indicator", "zero", "confined")[rng.below(3)]
            if mode == "confined":
                vectors = tuple(
                    Vector(field, tuple(
                        rng.below(q) if j in side else 0 for j in universe
                    ))
                    for side in sides
                )
            else:
                vectors = default_choice_vectors(instance, mode)
            try:
                scheme = build_scheme(instance, vectors)
            except EmptyInputError:
                continue
            break
        code = scheme.code
        for _ in range(3):
            t = rng.below(n - 1)
            known = frozenset(rng.subset(universe, t))
            rest = tuple(sorted(set(universe) - known))
            block = frozenset(rng.subset(rest, 1 + rng.below(len(rest))))
            x = tuple(rng.below(q) for _ in range(n))
            cases += 1
            if _routes_disagree(code, known, block, [(x, _broadcast(code, x))], failures):
                return _done("lemma3", cases, failures[0])
    return _done("lemma3", cases, None)


def _suite_security_thresholds(seed: int, corpus: tuple[CorpusEntry, ...]) -> SuiteResult:
    cases = 0
    rng = Rng(seed)
    for entry in corpus:
        code = entry.code
        n, k = code.length, code.dimension
        field = code.field
        d = code.min_distance
        for t in range(max(0, d - 1)):
            cases += 1
            if block_security_level(code, t) < d - 1 - t:
                return _done("thm3", cases, {
                    "code": entry.name, "check": "guaranteed_floor", "t": t,
                    "measured": block_security_level(code, t), "floor": d - 1 - t,
                })
        distribution = code.weight_distribution
        for w in range(1, n + 1):
            if distribution[w] == 0:
                continue
            cases += 1
            witness = weak_security_witness(code, w - 1)
            if witness is None or len(witness.known) != w - 1:
                return _done("thm3", cases, {
                    "code": entry.name, "check": "witness_missing", "weight": w,
                })
            x = tuple(rng.below(field.q) for _ in range(n))
            s = _broadcast(code, x)
            value = field.sub(
                witness.coefficients.dot(s),
                witness.combination.dot(Vector(field, x)),
            )
            if value != x[witness.exposed - 1]:
                return _done("thm3", cases, {
                    "code": entry.name, "check": "witness_wrong_value", "weight": w,
                    "exposed": witness.exposed, "recovered": value,
                    "actual": x[witness.exposed - 1],
                })
    for _ in range(200):
        entry = corpus[rng.below(len(corpus))]
        code = entry.code
        n, k = code.length, code.dimension
        field = code.field
        q = field.q
        t = rng.below(code.min_distance)
        known = rng.subset(tuple(range(1, n + 1)), t)
        x = tuple(rng.below(q) for _ in range(n))
        view = AdversaryView.of({i: x[i - 1] for i in known}, _broadcast(code, x))
        cases += 1
        try:
            candidates = list_attack(code, view)
        except (RankDeficientError, ListTooLargeError) as exc:
            return _done("thm3", cases, {
                "code": entry.name, "check": "list_attack_refused", "t": t,
                "known": sorted(known), "error": type(exc).__name__,
            })
        expected = q ** (n - t - k)
        if len(candidates) != expected or Vector(field, x) not in candidates:
            return _done("thm3", cases, {
                "code": entry.name, "check": "list_attack", "t": t,
                "known": sorted(known), "x": list(x),
                "list_size": len(candidates), "expected_size": expected,
                "contains_x": Vector(field, x) in candidates,
            })
    return _done("thm3", cases, None)


def _suite_full_recovery(seed: int, corpus: tuple[CorpusEntry, ...]) -> SuiteResult:
    cases = 0
    rng = Rng(seed)
    for entry in corpus:
        code = entry.code
        n, q = code.length, code.field.q
        threshold = n - code.dual_distance + 1
        if threshold > n - 1:
            continue
        for known in itertools.combinations(range(1, n + 1), threshold):
            x = tuple(rng.below(q) for _ in range(n))
            view = AdversaryView.of({i: x[i - 1] for i in known}, _broadcast(code, x))
            outcome = complete_insecurity_attack(code, view)
            cases += 1
            if not outcome.complete:
                return _done("thm4", cases, {
                    "code": entry.name, "known": list(known),
                    "resisted": list(outcome.resisted),
                })
            wrong = next(
                (i for i, v in outcome.recovered if v != x[i - 1]), None
            )
            if wrong is not None:
                return _done("thm4", cases, {
                    "code": entry.name, "known": list(known), "index": wrong,
                    "recovered": outcome.mapping[wrong], "actual": x[wrong - 1],
                })
    return _done("thm4", cases, None)


_SUITES = {
    "thm1": ("singleton bound and distance claims", _suite_singleton),
    "thm2": ("orthogonal-array counts", _suite_orthogonal_array),
    "lemma3": ("no-information test vs enumeration oracle", _suite_oracle_equivalence),
    "thm3": ("security floors, witnesses, list attacks", _suite_security_thresholds),
    "thm4": ("full recovery past the dual-distance threshold", _suite_full_recovery),
}

SUITE_NAMES = tuple(_SUITES)


def _done(name: str, cases: int, failure) -> SuiteResult:
    label = _SUITES[name][0]
    failures = () if failure is None else (failure,)
    return SuiteResult(name=name, label=label, cases=cases, failures=failures)


def run_suite(name: str, seed: int = 0, extra: tuple[CorpusEntry, ...] = ()) -> SuiteResult:
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    corpus = builtin_corpus(seed) + tuple(extra)
    return _SUITES[name][1](seed, corpus)


def run_all(seed: int = 0, extra: tuple[CorpusEntry, ...] = ()) -> tuple[SuiteResult, ...]:
    corpus = builtin_corpus(seed) + tuple(extra)
    return tuple(fn(seed, corpus) for _, fn in _SUITES.values())
