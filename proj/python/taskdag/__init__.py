"""Random task-dependency graphs with prescribed initial and terminal counts."""

from ._core import (
    ConfigKindError,
    DomainError,
    Graph,
    TaskdagError,
    build_family,
    classify_extremal,
    combined_edge_bounds,
    count_linear_extensions,
    expected_tree_path_length,
    extremal_value,
    find_removable_path,
    from_json,
    growth_experiment,
    is_minimal_xy,
    oracle_extremal,
    oracle_is_minimal,
    random_directed_tree,
    removal_density_limit,
    retention_probability_bound,
    run_process,
    run_trials,
    table_experiment,
)

__all__ = [
    "ConfigKindError",
    "DomainError",
    "Graph",
    "TaskdagError",
    "build_family",
    "classify_extremal",
    "combined_edge_bounds",
    "count_linear_extensions",
    "expected_tree_path_length",
    "extremal_value",
    "find_removable_path",
    "from_json",
    "growth_experiment",
    "is_minimal_xy",
    "oracle_extremal",
    "oracle_is_minimal",
    "random_directed_tree",
    "removal_density_limit",
    "retention_probability_bound",
    "run_process",
    "run_trials",
    "table_experiment",
]
