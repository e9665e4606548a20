"""Exceptions raised by the solver library."""

from typing import Optional, Tuple


class SweepingError(Exception):
    """Base class for all solver errors."""


class ConfigurationError(SweepingError, ValueError):
    """Invalid grid, plan, problem or run configuration."""


class GridMismatchError(ConfigurationError):
    """Fields or grids that should share a point set do not."""


class MissingExactSolutionError(SweepingError, LookupError):
    """The problem has no closed-form exact solution."""


class DivergenceError(SweepingError, ArithmeticError):
    """A sweep produced a non-finite value or a runaway residual."""

    def __init__(self, point: Tuple[int, ...], iteration: int, reason: str = "non-finite value"):
        self.point = point
        self.iteration = iteration
        self.reason = reason
        super().__init__(f"{reason} at grid point {point} during sweep {iteration}")


class NonConvergenceError(SweepingError):
    """The iteration limit was reached before the residual fell below delta."""

    def __init__(self, residual: float, iterations: int, delta: Optional[float] = None):
        self.residual = residual
        self.iterations = iterations
        self.delta = delta
        target = f" (delta={delta:.3g})" if delta is not None else ""
        super().__init__(
            f"no convergence after {iterations} sweeps, last residual {residual:.3e}{target}"
        )


class ComponentSolveError(SweepingError):
    """A component grid of a sparse-grid solve failed."""

    def __init__(self, levels: Tuple[int, ...], message: str):
        self.levels = levels
        super().__init__(f"component grid at levels {levels} failed: {message}")
