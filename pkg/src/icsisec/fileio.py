"""JSON interchange: instance files in, report files out.

Instance documents carry 1-based message indices and canonical-integer
field values, exactly as the library API does, so files stay human
auditable. Parsing is strict: unknown keys anywhere are an error, as are
duplicate indices, because silently ignored typos in security fixtures are
worse than load failures.

Instance document shape:

    {
      "field": {"p": 2},                    // or {"p": 2, "m": 3, "poly": [1, 1, 0, 1]}
      "n": 7,
      "receivers": [
        {"side_info": [6, 7], "demand": 1},
        {"side_info": [1, 3], "demand": [2, 5]}   // auto-split, one notice
      ],
      "choice_policy": "indicator"          // or "zero", or a list of m vectors
    }

Report documents round-trip SecurityReport plus the generator matrix
losslessly; dumps_report fixes the byte-level form (sorted two-space
indent, trailing newline) that golden files and the determinism contract
rely on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from .algebra import AlgebraError, Field, Matrix, Vector
from .code import LinearCode
from .icsi import (
    IcsiInstance,
    MalformedInstanceError,
    default_choice_vectors,
    split_multi_request,
    validate,
)
from .security import (
    RecoveryCounterexample,
    SecurityReport,
    StrengthVerdict,
    WeakSecurityWitness,
)

TOOL_VERSION = "0.1.0"


@dataclass(frozen=True)
class LoadedInstance:
    """A parsed instance plus its choice vectors and any loader notices."""

    instance: IcsiInstance
    choice_vectors: tuple[Vector, ...]
    notices: tuple[str, ...]


def _require_keys(obj: dict, allowed: set[str], required: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise MalformedInstanceError(f"unknown key {sorted(unknown)[0]!r} in {where}")
    missing = required - set(obj)
    if missing:
        raise MalformedInstanceError(f"missing key {sorted(missing)[0]!r} in {where}")


def _as_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInstanceError(f"{where} must be an integer, got {value!r}")
    return value


def _as_index_list(value: Any, where: str) -> list[int]:
    if not isinstance(value, list):
        raise MalformedInstanceError(f"{where} must be a list, got {value!r}")
    out = [_as_int(v, where) for v in value]
    if len(set(out)) != len(out):
        raise MalformedInstanceError(f"duplicate index in {where}")
    return out


def _parse_field(obj: Any) -> Field:
    if not isinstance(obj, dict):
        raise MalformedInstanceError("'field' must be an object")
    _require_keys(obj, {"p", "m", "poly"}, {"p"}, "'field'")
    p = _as_int(obj["p"], "'field.p'")
    m = _as_int(obj.get("m", 1), "'field.m'")
    poly = obj.get("poly")
    if poly is not None:
        poly = tuple(_as_int(c, "'field.poly'") for c in _as_index_list_allow_dups(poly))
    try:
        return Field(p, m, poly=poly)
    except (AlgebraError, ValueError) as exc:
        raise MalformedInstanceError(f"bad field: {exc}") from exc


def _as_index_list_allow_dups(value: Any) -> list[int]:
    if not isinstance(value, list):
        raise MalformedInstanceError(f"expected a list, got {value!r}")
    return [_as_int(v, "'field.poly' entry") for v in value]


def parse_instance(doc: Any) -> LoadedInstance:
    """Parse one instance document (already JSON-decoded) strictly."""
    if not isinstance(doc, dict):
        raise MalformedInstanceError("instance document must be a JSON object")
    _require_keys(doc, {"field", "n", "receivers", "choice_policy"}, {"field", "n", "receivers"}, "instance")
    field = _parse_field(doc["field"])
    n = _as_int(doc["n"], "'n'")
    receivers = doc["receivers"]
    if not isinstance(receivers, list) or not receivers:
        raise MalformedInstanceError("'receivers' must be a nonempty list")

    sides: list[frozenset[int]] = []
    demand_sets: list[list[int]] = []
    notices: list[str] = []
    for j, entry in enumerate(receivers, start=1):
        if not isinstance(entry, dict):
            raise MalformedInstanceError(f"receiver {j} must be an object")
        _require_keys(entry, {"side_info", "demand"}, {"side_info", "demand"}, f"receiver {j}")
        sides.append(frozenset(_as_index_list(entry["side_info"], f"receiver {j} side_info")))
        demand = entry["demand"]
        if isinstance(demand, list):
            wanted = _as_index_list(demand, f"receiver {j} demand")
            if not wanted:
                raise MalformedInstanceError(f"receiver {j} demands nothing")
        else:
            wanted = [_as_int(demand, f"receiver {j} demand")]
        demand_sets.append(wanted)
        if len(wanted) > 1:
            notices.append(
                f"receiver {j} demands {len(wanted)} messages; split into single-demand receivers"
            )

    instance = split_multi_request(field, n, sides, demand_sets)

    policy = doc.get("choice_policy", "indicator")
    if policy in ("indicator", "zero"):
        vectors = default_choice_vectors(instance, policy)
    elif isinstance(policy, list):
        if len(policy) != len(receivers):
            raise MalformedInstanceError(
                f"choice_policy lists {len(policy)} vectors for {len(receivers)} receivers"
            )
        per_file: list[Vector] = []
        for j, row in enumerate(policy, start=1):
            if not isinstance(row, list) or len(row) != n:
                raise MalformedInstanceError(
                    f"choice vector {j} must be a list of {n} field values"
                )
            values = tuple(_as_int(v, f"choice vector {j}") for v in row)
            try:
                for v in values:
                    field.check_value(v)
            except (AlgebraError, ValueError) as exc:
                raise MalformedInstanceError(f"choice vector {j}: {exc}") from exc
            per_file.append(Vector(field, values))
        expanded: list[Vector] = []
        for j, wanted in enumerate(demand_sets):
            expanded.extend([per_file[j]] * len(sorted(set(wanted))))
        vectors = tuple(expanded)
    else:
        raise MalformedInstanceError(
            f"choice_policy must be 'indicator', 'zero', or a vector list, got {policy!r}"
        )

    notices.extend(validate(instance))
    return LoadedInstance(instance, vectors, tuple(notices))


def load_instance(path: str) -> LoadedInstance:
    """Read and parse an instance file; JSON syntax errors surface as
    MalformedInstanceError, I/O errors as OSError."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInstanceError(f"{path}: not valid JSON ({exc})") from exc
    return parse_instance(doc)


def _field_to_dict(field: Field) -> dict:
    return {
        "p": field.p,
        "m": field.m,
        "poly": list(field.poly) if field.poly is not None else None,
    }


def _witness_to_dict(witness: Optional[WeakSecurityWitness]) -> Optional[dict]:
    if witness is None:
        return None
    return {
        "known": sorted(witness.known),
        "exposed": witness.exposed,
        "combination": list(witness.combination.entries),
        "coefficients": list(witness.coefficients.entries),
    }


def _counterexample_to_dict(cex: Optional[RecoveryCounterexample]) -> Optional[dict]:
    if cex is None:
        return None
    return {"known": sorted(cex.known), "resisted": cex.resisted}


def report_to_dict(report: SecurityReport, code: LinearCode) -> dict:
    return {
        "tool_version": TOOL_VERSION,
        "seed": report.seed,
        "mode": report.mode,
        "field": _field_to_dict(code.field),
        "code": {
            "n": report.length,
            "k": report.dimension,
            "d": report.min_distance,
            "d_dual": report.dual_distance,
        },
        "insecure_from": report.insecurity_threshold,
        "generator": [list(row) for row in code.generator.entries],
        "strengths": [
            {
                "t": v.strength,
                "guaranteed_block_level": v.guaranteed_block_level,
                "measured_block_level": v.measured_block_level,
                "weakly_secure": v.weakly_secure,
                "weak_witness": _witness_to_dict(v.weak_witness),
                "completely_insecure": v.completely_insecure,
                "counterexample": _counterexample_to_dict(v.complete_counterexample),
            }
            for v in report.strengths
        ],
    }


def _field_from_dict(obj: dict) -> Field:
    _require_keys(obj, {"p", "m", "poly"}, {"p", "m", "poly"}, "report 'field'")
    poly = obj["poly"]
    return Field(obj["p"], obj["m"], poly=tuple(poly) if poly is not None else None)


def report_from_dict(doc: dict) -> tuple[SecurityReport, LinearCode]:
    """Rebuild a report and its code from a document; inverse of
    report_to_dict for well-formed input."""
    top = {
        "tool_version", "seed", "mode", "field", "code",
        "insecure_from", "generator", "strengths",
    }
    _require_keys(doc, top, top, "report")
    field = _field_from_dict(doc["field"])
    generator = Matrix(field, tuple(tuple(v for v in row) for row in doc["generator"]))
    code = LinearCode(generator)
    params = doc["code"]
    _require_keys(params, {"n", "k", "d", "d_dual"}, {"n", "k", "d", "d_dual"}, "report 'code'")
    verdicts = []
    for entry in doc["strengths"]:
        keys = {
            "t", "guaranteed_block_level", "measured_block_level", "weakly_secure",
            "weak_witness", "completely_insecure", "counterexample",
        }
        _require_keys(entry, keys, keys, "report strength entry")
        wd = entry["weak_witness"]
        witness = None
        if wd is not None:
            witness = WeakSecurityWitness(
                known=frozenset(wd["known"]),
                exposed=wd["exposed"],
                combination=Vector(field, tuple(wd["combination"])),
                coefficients=Vector(field, tuple(wd["coefficients"])),
            )
        cd = entry["counterexample"]
        cex = None
        if cd is not None:
            cex = RecoveryCounterexample(known=frozenset(cd["known"]), resisted=cd["resisted"])
        verdicts.append(
            StrengthVerdict(
                strength=entry["t"],
                guaranteed_block_level=entry["guaranteed_block_level"],
                measured_block_level=entry["measured_block_level"],
                weakly_secure=entry["weakly_secure"],
                weak_witness=witness,
                completely_insecure=entry["completely_insecure"],
                complete_counterexample=cex,
            )
        )
    report = SecurityReport(
        length=params["n"],
        dimension=params["k"],
        min_distance=params["d"],
        dual_distance=params["d_dual"],
        insecurity_threshold=doc["insecure_from"],
        mode=doc["mode"],
        seed=doc["seed"],
        strengths=tuple(verdicts),
    )
    return report, code


def dumps_report(report: SecurityReport, code: LinearCode) -> str:
    """The canonical byte form of a report: stable key order, two-space
    indent, trailing newline."""
    return json.dumps(report_to_dict(report, code), indent=2) + "\n"
