"""Linear index-coding schemes with exact eavesdropper-security analysis."""

from .algebra import (
    AlgebraError,
    DimensionMismatchError,
    Field,
    FieldElement,
    FieldMismatchError,
    InconsistentSystemError,
    IndexOutOfRangeError,
    Matrix,
    NotPrimeError,
    ReduciblePolynomialError,
    Vector,
    rref,
    solve,
    unit_vector,
)
from .code import (
    CodeError,
    LinearCode,
    TooLargeToEnumerateError,
    iterate_span,
    oa_tuple_counts,
    reed_solomon_code,
)
from .fileio import (
    LoadedInstance,
    TOOL_VERSION,
    dumps_report,
    load_instance,
    parse_instance,
    report_from_dict,
    report_to_dict,
)
from .icsi import (
    ConfinementViolationError,
    IcsiError,
    IcsiInstance,
    MalformedInstanceError,
    NotDecodableError,
    Scheme,
    build_scheme,
    decode_receiver,
    decoding_plan,
    default_choice_vectors,
    encode,
    feasible,
    split_multi_request,
    validate,
    vectorize_instance,
)
from .security import (
    AdversaryView,
    AttackOutcome,
    BlockEntropy,
    InconsistentObservationError,
    ListTooLargeError,
    RankDeficientError,
    SecurityError,
    SecurityQuery,
    SecurityReport,
    StrengthVerdict,
    WeakSecurityWitness,
    block_security_level,
    complete_insecurity_attack,
    conditional_block_entropy,
    distance_guarantees,
    has_no_information,
    list_attack,
    security_report,
    weak_security_witness,
)
from .verify import SUITE_NAMES, builtin_corpus, run_all, run_suite

__version__ = TOOL_VERSION

__all__ = [
    "AdversaryView",
    "AlgebraError",
    "AttackOutcome",
    "BlockEntropy",
    "CodeError",
    "ConfinementViolationError",
    "DimensionMismatchError",
    "Field",
    "FieldElement",
    "FieldMismatchError",
    "IcsiError",
    "IcsiInstance",
    "InconsistentObservationError",
    "InconsistentSystemError",
    "IndexOutOfRangeError",
    "LinearCode",
    "ListTooLargeError",
    "LoadedInstance",
    "MalformedInstanceError",
    "Matrix",
    "NotDecodableError",
    "NotPrimeError",
    "RankDeficientError",
    "ReduciblePolynomialError",
    "SUITE_NAMES",
    "Scheme",
    "SecurityError",
    "SecurityQuery",
    "SecurityReport",
    "StrengthVerdict",
    "TOOL_VERSION",
    "TooLargeToEnumerateError",
    "Vector",
    "WeakSecurityWitness",
    "block_security_level",
    "build_scheme",
    "builtin_corpus",
    "complete_insecurity_attack",
    "conditional_block_entropy",
    "decode_receiver",
    "decoding_plan",
    "default_choice_vectors",
    "distance_guarantees",
    "dumps_report",
    "encode",
    "feasible",
    "has_no_information",
    "iterate_span",
    "list_attack",
    "load_instance",
    "oa_tuple_counts",
    "parse_instance",
    "report_from_dict",
    "report_to_dict",
    "reed_solomon_code",
    "rref",
    "run_all",
    "run_suite",
    "security_report",
    "solve",
    "split_multi_request",
    "unit_vector",
    "validate",
    "vectorize_instance",
]
