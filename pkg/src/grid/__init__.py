"""Single grids and semi-coarsened sparse-grid families."""

from .cartesian_grid import MIN_CELLS, CartesianGrid, Domain, build_grid
from .sparse_plan import PlanEntry, SparsePlan, combination_coefficient, semi_coarsened_family

__all__ = [
    "MIN_CELLS",
    "CartesianGrid",
    "Domain",
    "build_grid",
    "PlanEntry",
    "SparsePlan",
    "combination_coefficient",
    "semi_coarsened_family",
]
