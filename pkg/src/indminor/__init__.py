"""Induced-minor detection for the kite, F1, F2 and H2 patterns."""

from .dcs import DCSInstance, DCSSolution, ResourceLimitError, solve_dcs, solve_dcs_minimal
from .detectors import detect, detect_f1, detect_f2, detect_h_plus_path, detect_kite
from .graphs import (
    Graph,
    ParseError,
    are_mutually_induced,
    encode_graph,
    encode_graph6,
    generate,
    gnp_random_graph,
    parse_graph,
    parse_graph6,
)
from .h2 import Frame, detect_h2, detect_small_h2_model, f_reduced, find_centre, reversed_f_reduced
from .models import (
    Model,
    check_degree2_bag_is_path,
    check_leaf_lemma,
    minimize_model,
    model_from_json,
    model_to_json,
    model_violation,
    verify_model,
)
from .oracle import (
    BUDGET_EXCEEDED,
    NO,
    YES,
    BudgetError,
    OracleBudget,
    brute_force_hole_through,
    brute_force_induced_disjoint_paths,
    brute_force_induced_minor,
    brute_force_windmill,
)
from .patterns import PatternGraph, degree_sequence, pattern
from .windmill import (
    I2DPInstance,
    ReductionResult,
    TwoInAHoleInstance,
    WindmillParams,
    is_hub_free,
    reduce_2iah_to_windmill,
    reduce_i2dp_to_windmill,
    verify_windmill,
)

__all__ = [name for name in dir() if not name.startswith("_")]
