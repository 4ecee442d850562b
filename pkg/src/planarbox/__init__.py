"""Adaptive algorithms for the optimal axis-aligned planar box problem over
monotone decomposable score functions."""

from .score import (
    NEG_INF,
    NEGATIVE,
    POSITIVE,
    OpCounters,
    Point,
    ScoreFunction,
    classify_sign,
    compose,
    make_score_function,
)
from .interval import Interval, empty_interval
from .mcs_static import StaticMcsTree
from .mcs_dynamic import McsBalancedTree, McsSplayTree, splay_access_cost_probe
from .measures import (
    MeasureReport,
    StripeDecomposition,
    entropy,
    inversions,
    local_insertion_complexity,
    measure_report,
    position_variation,
    resort_within_stripes,
    runs,
    stripes,
)
from .sweep import (
    SOLVERS,
    BoxResult,
    solve_baseline,
    solve_combined,
    solve_finger,
    solve_stripes,
)
from .diagonal import (
    BOTTOM_UP,
    TOP_DOWN,
    Member,
    TenBoxes,
    boundary_constrained_best,
    build_dstar,
    build_dtree,
    combine_ten,
    count_peels,
    extreme_points,
    find_windmill,
    is_windmill,
    solve_dstar,
    solve_dtree,
    ten_boxes_direct,
    try_diagonalize,
)
from . import generators, io, oracle

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
