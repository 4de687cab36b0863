"""Balanced periodic assignment of weekly recurring tasks to interchangeable workers."""
from .assignment import (
    BalanceProfile,
    FeasibilityResult,
    PeriodicAssignment,
    WeekDecomposition,
    balance_profile,
    decomposition_from_week,
    induced_schedules,
    is_balanced,
    is_feasible,
)
from .augmentation import AugmentedInstance, augment, extend_first_week, fictitious_length, restrict_plan
from .coloring import FirstWeekColoring, Infeasible, build_interval_graph, color_first_week, decide_feasible
from .decomposition import build_universal_set, find_decomposition, find_decomposition_with_pair
from .digraph import LabeledDigraph, LabelPermutation, build_digraph, is_weakly_connected, label_permutation
from .extended import ExtendedDecision, build_periodic_plan_extended, decide_balanced_extended, solve_extended
from .io import load_fixture, load_instance, load_plan
from .merge import (
    Decision,
    apply_merge,
    build_period_q_plan,
    closed_formula_plan,
    decide_balanced_basic,
    find_merge,
    min_workers,
    saturate_merges,
    solve_basic,
)
from .model import (
    InfeasibleInstanceError,
    InputError,
    Instance,
    Schedule,
    Task,
    all_non_overlapping_schedules,
    as_basic_extended,
    boundary_tasks,
    max_overlap_depth,
    validate,
)
from .pebbles import (
    ColoredEulerianGraph,
    lift_component,
    periodic_color_sequence,
    simulate_random_colors,
    visit_frequencies,
)

__version__ = "0.1.0"


def decide(instance: Instance):
    """Route to the basic or extended decision depending on whether a schedule set is present."""
    return decide_balanced_extended(instance) if instance.is_extended else decide_balanced_basic(instance)


def solve(instance: Instance):
    return solve_extended(instance) if instance.is_extended else solve_basic(instance)
