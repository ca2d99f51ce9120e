"""Self-organizing sequential search laboratory.

Four list-accessing engines (move-to-front, transpose, frequency count, and
a batched-lookahead frequency-count variant) over a shared list-state core,
with corpus preprocessing, synthetic workload generators, brute-force
oracles for small instances, and CSV / SVG comparison reporting.
"""

from .algorithms import (
    AlgorithmKind,
    CursorExhausted,
    RunReport,
    VfcPolicy,
    VfcRunState,
    fc_step,
    frequency_count_reorganize,
    mtf_step,
    run_algorithm,
    trans_step,
    vfc_lookahead_size,
    vfc_step,
)
from .chart import EmptyReport, render_bar_chart
from .corpus import (
    DEFAULT_STRIP_BYTES,
    CorpusText,
    EmptyAfterPreprocessing,
    EmptyAlphabet,
    EmptySequence,
    ListOrderPolicy,
    RunLengths,
    Uniform,
    Zipf,
    derive_list,
    generate_sequence,
    load_file,
    preprocess,
)
from .listcore import (
    BackwardMove,
    CostModel,
    ListLabError,
    ListState,
    PositionOutOfRange,
    RequestSequence,
    StepRecord,
    Symbol,
    SymbolNotInList,
    access_cost,
    move_forward,
    position_of,
)
from .oracle import (
    BoundsExceeded,
    InstanceTooLarge,
    SmallInstance,
    VerificationReport,
    enumerate_instances,
    naive_fc_cost,
    naive_fc_step_costs,
    opt_free_exchange_cost,
    verify_engines,
)
from .report import ComparisonRow, format_table, rows_from_csv, rows_to_csv

__version__ = "0.1.0"

__all__ = [
    "AlgorithmKind",
    "BackwardMove",
    "BoundsExceeded",
    "ComparisonRow",
    "CorpusText",
    "CostModel",
    "CursorExhausted",
    "DEFAULT_STRIP_BYTES",
    "EmptyAfterPreprocessing",
    "EmptyAlphabet",
    "EmptyReport",
    "EmptySequence",
    "InstanceTooLarge",
    "ListLabError",
    "ListOrderPolicy",
    "ListState",
    "PositionOutOfRange",
    "RequestSequence",
    "RunLengths",
    "RunReport",
    "SmallInstance",
    "StepRecord",
    "Symbol",
    "SymbolNotInList",
    "Uniform",
    "VerificationReport",
    "VfcPolicy",
    "VfcRunState",
    "Zipf",
    "access_cost",
    "derive_list",
    "enumerate_instances",
    "fc_step",
    "format_table",
    "frequency_count_reorganize",
    "generate_sequence",
    "load_file",
    "move_forward",
    "mtf_step",
    "naive_fc_cost",
    "naive_fc_step_costs",
    "opt_free_exchange_cost",
    "position_of",
    "preprocess",
    "render_bar_chart",
    "rows_from_csv",
    "rows_to_csv",
    "run_algorithm",
    "trans_step",
    "vfc_lookahead_size",
    "vfc_step",
]
