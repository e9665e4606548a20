"""PDE instances: Hamiltonians, boundary data and the benchmark problems."""

from .benchmarks import (
    BENCHMARK_IDS,
    ProblemSpec,
    exact_solution,
    list_benchmarks,
    make_benchmark,
    make_custom_problem,
    parse_case,
    shading_brightness,
)
from .boundary import BoundaryData, BoundaryKind, PlaneMember, PointMember, SphereMember
from .hamiltonian import HamiltonianSpec, boat_sail, eikonal, eval_hamiltonian, linear_advection

__all__ = [
    "BENCHMARK_IDS",
    "ProblemSpec",
    "exact_solution",
    "list_benchmarks",
    "make_benchmark",
    "make_custom_problem",
    "parse_case",
    "shading_brightness",
    "BoundaryData",
    "BoundaryKind",
    "PlaneMember",
    "PointMember",
    "SphereMember",
    "HamiltonianSpec",
    "boat_sail",
    "eikonal",
    "eval_hamiltonian",
    "linear_advection",
]
