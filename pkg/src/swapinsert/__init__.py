"""Swap-insert string correction: adaptive solver, oracles, and tooling."""

from .cost import Cost
from .engine import (
    EngineResult,
    MalformedStateKey,
    ScriptUnavailable,
    StateCodec,
    StateKey,
    correction_distance,
    decode_state,
    distance,
    distance_with_script,
    encode_state,
    feasible,
    memo_bound,
    swap_delete_correction,
    swap_delete_distance,
    weighted_distance,
)
from .indexing import (
    AlphabetMap,
    AlphabetTooLarge,
    IndexedString,
    UnknownSymbol,
    build_alphabet,
    count,
    index_string,
    rank,
    select,
)
from .oracles import InstanceTooLarge, matching_distance, ucs_distance
from .scripts import (
    Delete,
    EqualSymbolSwap,
    Insert,
    InvalidPosition,
    Script,
    Swap,
    Verdict,
    apply_script,
    verify_script,
)
from .toolkit import (
    BenchRecord,
    EquivalenceReport,
    GeneratorSpec,
    InfeasibleProfile,
    InstanceStats,
    exhaustive_oracle_check,
    generate_instance,
    instance_stats,
    run_bench,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetMap",
    "AlphabetTooLarge",
    "BenchRecord",
    "Cost",
    "Delete",
    "EngineResult",
    "EqualSymbolSwap",
    "EquivalenceReport",
    "GeneratorSpec",
    "IndexedString",
    "InfeasibleProfile",
    "Insert",
    "InstanceStats",
    "InstanceTooLarge",
    "InvalidPosition",
    "MalformedStateKey",
    "Script",
    "ScriptUnavailable",
    "StateCodec",
    "StateKey",
    "Swap",
    "UnknownSymbol",
    "Verdict",
    "apply_script",
    "build_alphabet",
    "correction_distance",
    "count",
    "decode_state",
    "distance",
    "distance_with_script",
    "encode_state",
    "exhaustive_oracle_check",
    "feasible",
    "generate_instance",
    "index_string",
    "instance_stats",
    "matching_distance",
    "memo_bound",
    "rank",
    "run_bench",
    "select",
    "swap_delete_correction",
    "swap_delete_distance",
    "ucs_distance",
    "verify_script",
    "weighted_distance",
]
