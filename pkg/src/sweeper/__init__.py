"""The fixed-point fast sweeping engine."""

from .fast_sweeper import FastSweeper, initialize, rk_iteration, solve_single_grid, sweep_orderings
from .field import DerivativeMode, ScalarField, SweepConfig
from .lax_friedrichs import lax_friedrichs

__all__ = [
    "FastSweeper",
    "initialize",
    "rk_iteration",
    "solve_single_grid",
    "sweep_orderings",
    "DerivativeMode",
    "ScalarField",
    "SweepConfig",
    "lax_friedrichs",
]
