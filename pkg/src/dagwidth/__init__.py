"""Width and right-most maximum antichain of a DAG, by a one-pass sweep that
maintains the frontier antichains of the processed prefix, with brute-force
oracles, width-controlled generators and a benchmark harness around it."""

from .bench import CSV_COLUMNS, BenchRecord, bench_run, load_configs, records_to_csv, write_csv
from .generate import (
    FAMILIES,
    GenConfig,
    dag_from_config,
    gen_chain,
    gen_chain_union,
    gen_independent,
    gen_layered,
    gen_random,
    gen_staircase,
    random_corpus,
)
from .graph import (
    CycleError,
    Dag,
    EdgeListParseError,
    build_dag,
    dag_from_topological,
    induced_prefix,
    parse_edge_list,
    topological_order,
)
from .oracle import (
    DEFAULT_ENUM_LIMIT,
    ReachMatrix,
    brute_frontiers,
    brute_rightmost_max,
    dominates,
    enumerate_antichains,
    transitive_closure,
    width_via_matching,
)
from .sweep import (
    Antichain,
    FrontierResult,
    FrontierSet,
    FrontierSweep,
    SupportRecord,
    SweepStats,
    antichain_dominates,
    antichain_reaches,
    compute_frontiers,
    compute_width,
    decide_width_at_most,
)

__version__ = "0.1.0"

__all__ = [
    "Antichain",
    "BenchRecord",
    "CSV_COLUMNS",
    "CycleError",
    "Dag",
    "DEFAULT_ENUM_LIMIT",
    "EdgeListParseError",
    "FAMILIES",
    "FrontierResult",
    "FrontierSet",
    "FrontierSweep",
    "GenConfig",
    "ReachMatrix",
    "SupportRecord",
    "SweepStats",
    "antichain_dominates",
    "antichain_reaches",
    "bench_run",
    "brute_frontiers",
    "brute_rightmost_max",
    "build_dag",
    "compute_frontiers",
    "compute_width",
    "dag_from_config",
    "dag_from_topological",
    "decide_width_at_most",
    "dominates",
    "enumerate_antichains",
    "gen_chain",
    "gen_chain_union",
    "gen_independent",
    "gen_layered",
    "gen_random",
    "gen_staircase",
    "induced_prefix",
    "load_configs",
    "parse_edge_list",
    "random_corpus",
    "records_to_csv",
    "topological_order",
    "transitive_closure",
    "width_via_matching",
    "write_csv",
]
