"""rcgraph: rainbow-k-connectivity of Erdos-Renyi random graphs.

Seeded graph generation with monotone coupling, exact rainbow-k-
connectivity verification, a brute-force minimum-color oracle for small
graphs, branching-tree certificates of internally vertex-disjoint
length-d paths, closed-form threshold calculators, and a reproducible
Monte Carlo sweep harness with a CLI.
"""

from .construct import (
    ColoringFailure,
    GrowthFailure,
    NotKConnected,
    RainbowColoring,
    TreeGrowth,
    count_disjoint_length_d_paths,
    grow_disjoint_paths,
    grow_tree,
    pair_color,
    rainbow_color_random,
    rainbow_k_color,
)
from .graphs import (
    INFINITE,
    Graph,
    diameter,
    gnp_generate,
    vertex_connectivity_at_least,
)
from .rainbow import (
    EXCEEDS,
    BudgetExceeded,
    EdgeColoring,
    PathPacking,
    RcResult,
    VerifyResult,
    enumerate_rainbow_paths,
    is_rainbow_k_connected,
    max_disjoint_rainbow_paths,
    rc_k_exact,
    validate_path_packing,
)
from .sweep import (
    SweepConfig,
    SweepMode,
    SweepRecord,
    emit,
    parse_config_text,
    run_growth_census,
    run_threshold_sweep,
)
from .theory import (
    ThresholdParams,
    binary_entropy,
    choose_depth_from_epsilon,
    failure_exponent,
    guaranteed_disjoint_paths,
    lower_probe,
    rainbow_prob,
    sharp_threshold,
    upper_probe,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ColoringFailure",
    "EXCEEDS",
    "EdgeColoring",
    "Graph",
    "GrowthFailure",
    "INFINITE",
    "NotKConnected",
    "PathPacking",
    "RainbowColoring",
    "RcResult",
    "SweepConfig",
    "SweepMode",
    "SweepRecord",
    "ThresholdParams",
    "TreeGrowth",
    "VerifyResult",
    "binary_entropy",
    "choose_depth_from_epsilon",
    "count_disjoint_length_d_paths",
    "diameter",
    "emit",
    "enumerate_rainbow_paths",
    "failure_exponent",
    "gnp_generate",
    "grow_disjoint_paths",
    "grow_tree",
    "guaranteed_disjoint_paths",
    "is_rainbow_k_connected",
    "lower_probe",
    "max_disjoint_rainbow_paths",
    "pair_color",
    "parse_config_text",
    "rainbow_color_random",
    "rainbow_k_color",
    "rainbow_prob",
    "rc_k_exact",
    "run_growth_census",
    "run_threshold_sweep",
    "sharp_threshold",
    "upper_probe",
    "validate_path_packing",
    "vertex_connectivity_at_least",
]
