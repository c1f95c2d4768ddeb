"""Deterministic traffic lane planning, sampling, and comparison tools."""

from .census import CensusRow, CensusTable, parse_census, parse_counts_file
from .compare import CompareResult, EnsembleSpec, SizeStats, run_compare, write_outputs
from .config import FileConfig, parse_config_text
from .domain import (
    LanePlan,
    SimulationReport,
    SpeedClass,
    TransitionEvent,
    VehicleRecord,
    classify_speed,
    parse_vehicle_file,
    render_vehicle_file,
)
from .errors import (
    ConfigError,
    DegenerateDistribution,
    DegenerateFit,
    EmptyStream,
    InvalidBudget,
    InvalidSampleSize,
    LaneflowError,
    NoAdjacentLane,
    ParseError,
    PlanHasNoAdjacentLane,
    RowUnusable,
    SpeedOutOfModel,
)
from .kinematics import OvertakePair, catch_up_ticks, literal_overtake_count, transition_target
from .part1 import (
    OvertakePairing,
    build_lane_plan,
    count_transitions,
    enumerate_overtake_pairs,
    simulate_part1,
)
from .part2 import KnowledgeBase, LaneState, assign_stream, budget_from_part1, kb_assign, kb_new, simulate_part2
from .report import canonical_json, render_report, report_to_dict
from .rng import SplitMix64, combine_seed
from .stats import (
    ClassCountVector,
    TrendFit,
    class_count_sd,
    linear_trend,
    scale_class_counts,
    size_biased_expectation,
)
from .synth import DEFAULT_ARRIVAL_GAP_MAX, DEFAULT_SPEED_RANGES, SynthConfig, synthesize_stream

__version__ = "0.1.0"

__all__ = [
    "CensusRow",
    "CensusTable",
    "ClassCountVector",
    "CompareResult",
    "ConfigError",
    "DegenerateDistribution",
    "DegenerateFit",
    "EmptyStream",
    "EnsembleSpec",
    "FileConfig",
    "InvalidBudget",
    "InvalidSampleSize",
    "KnowledgeBase",
    "LaneflowError",
    "LanePlan",
    "LaneState",
    "NoAdjacentLane",
    "OvertakePair",
    "OvertakePairing",
    "ParseError",
    "PlanHasNoAdjacentLane",
    "RowUnusable",
    "SimulationReport",
    "SizeStats",
    "SpeedClass",
    "SpeedOutOfModel",
    "SplitMix64",
    "SynthConfig",
    "TransitionEvent",
    "TrendFit",
    "VehicleRecord",
    "DEFAULT_ARRIVAL_GAP_MAX",
    "DEFAULT_SPEED_RANGES",
    "assign_stream",
    "budget_from_part1",
    "build_lane_plan",
    "canonical_json",
    "catch_up_ticks",
    "class_count_sd",
    "classify_speed",
    "combine_seed",
    "count_transitions",
    "enumerate_overtake_pairs",
    "kb_assign",
    "kb_new",
    "linear_trend",
    "literal_overtake_count",
    "parse_census",
    "parse_config_text",
    "parse_counts_file",
    "parse_vehicle_file",
    "render_report",
    "render_vehicle_file",
    "report_to_dict",
    "run_compare",
    "scale_class_counts",
    "simulate_part1",
    "simulate_part2",
    "size_biased_expectation",
    "synthesize_stream",
    "transition_target",
    "write_outputs",
    "__version__",
]
