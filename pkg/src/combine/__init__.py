"""The sparse-grid combination technique."""

from .sparse_solver import PHASES, ComponentReport, SparseSolveResult, combine_fields, solve_sparse

__all__ = ["PHASES", "ComponentReport", "SparseSolveResult", "combine_fields", "solve_sparse"]
