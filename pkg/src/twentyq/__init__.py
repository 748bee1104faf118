"""Question trees for twenty-questions games that always end with a yes."""

from .analysis import (
    BarBetResult,
    SweepPoint,
    analyze,
    bar_bet,
    bar_bet_distribution,
    gap_family,
    max_gap_sweep,
    report_text,
    sweep_csv,
)
from .core import (
    AnalysisReport,
    Distribution,
    Internal,
    Leaf,
    average_depth,
    codewords,
    count_leaves,
    depth_profile,
    is_full_binary,
    is_yes_tree,
    iter_leaves,
    leaf_depths,
    load_distribution,
    parse_distribution,
    prune_appended,
    to_dot,
    validate_distribution,
)
from .entropy import GroupingSplit, binary_entropy, entropy, grouping_decompose
from .errors import TwentyQError, ValidationError
from .game import (
    ACTIVE,
    INCONSISTENT,
    WON,
    ExpectedQuestions,
    GameSession,
    answer,
    current_question,
    expected_questions,
    honest_reply,
    start_session,
)
from .huffman import build_huffman, gallager_rhs, gallager_sigma
from .optimal_search import (
    OptimalResult,
    ProfileCatalog,
    build_hat_tree,
    build_tree_from_profile,
    enumerate_profiles,
    max_objects,
    optimal_yes_tree,
    oracle_optimal,
)
from .yes_constraint import AugmentResult, augment, relabel_optimally

__version__ = "0.1.0"

__all__ = [
    "ACTIVE",
    "INCONSISTENT",
    "WON",
    "AnalysisReport",
    "AugmentResult",
    "BarBetResult",
    "Distribution",
    "ExpectedQuestions",
    "GameSession",
    "GroupingSplit",
    "Internal",
    "Leaf",
    "OptimalResult",
    "ProfileCatalog",
    "SweepPoint",
    "TwentyQError",
    "ValidationError",
    "analyze",
    "answer",
    "augment",
    "average_depth",
    "bar_bet",
    "bar_bet_distribution",
    "binary_entropy",
    "build_hat_tree",
    "build_huffman",
    "build_tree_from_profile",
    "codewords",
    "count_leaves",
    "current_question",
    "depth_profile",
    "entropy",
    "enumerate_profiles",
    "expected_questions",
    "gallager_rhs",
    "gallager_sigma",
    "gap_family",
    "grouping_decompose",
    "honest_reply",
    "is_full_binary",
    "is_yes_tree",
    "iter_leaves",
    "leaf_depths",
    "load_distribution",
    "max_gap_sweep",
    "max_objects",
    "optimal_yes_tree",
    "oracle_optimal",
    "parse_distribution",
    "prune_appended",
    "relabel_optimally",
    "report_text",
    "start_session",
    "sweep_csv",
    "to_dot",
    "validate_distribution",
]
