"""Runge-Kutta fixed-point fast sweeping on a single Cartesian grid."""

import logging
import time
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import ConfigurationError, DivergenceError, NonConvergenceError
from ..grid import CartesianGrid
from ..problem import ProblemSpec
from .field import ScalarField, SweepConfig
from .kernels import as_kernel_array, rk_stage_pass, single_point_update

logger = logging.getLogger(__name__)

Ordering = Tuple[bool, ...]


def sweep_orderings(dim: int) -> List[Ordering]:
    """
    Alternating loop directions, ``True`` meaning a descending loop on that axis.

    Consecutive orderings differ in one axis (Gray code). In 2D this is
    i up j up, i down j up, i down j down, i up j down.
    """
    if dim not in (1, 2, 3):
        raise ConfigurationError(f"orderings exist for 1-3 axes, got {dim}")
    orderings = []
    for step in range(2 ** dim):
        code = step ^ (step >> 1)
        orderings.append(tuple(bool((code >> axis) & 1) for axis in range(dim)))
    return orderings


def _travel_time(speed: float, drift: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    """
    Straight-line travel time per unit rhs over ``offsets`` (axis 0 holds the components).

    With heading speed ``speed`` in a uniform drift the ground speed along the
    unit direction d is ``b.d + sqrt(F^2 - |b|^2 + (b.d)^2)``.
    """
    distance = np.sqrt(np.sum(offsets ** 2, axis=0))
    safe = np.where(distance > 0.0, distance, 1.0)
    along = np.tensordot(drift, offsets, axes=1) / safe
    ground = along + np.sqrt(speed ** 2 - float(np.dot(drift, drift)) + along ** 2)
    return np.where(distance > 0.0, distance / ground, 0.0)


class FastSweeper:
    """
    Gauss-Seidel RK sweeping engine bound to one problem, grid and config.

    Keeps the per-sweep residual history and phase timings of its last solve.
    When ``band_spacing`` is given the Gamma band is measured in cells of that
    spacing instead of the grid's own.
    """

    def __init__(
        self,
        spec: ProblemSpec,
        grid: CartesianGrid,
        config: SweepConfig,
        band_spacing: Optional[Sequence[float]] = None,
    ):
        if grid.dim != spec.dim:
            raise ConfigurationError(f"grid has {grid.dim} axes, problem has {spec.dim}")
        self.spec = spec
        self.grid = grid
        self.config = config
        self.band_spacing = None if band_spacing is None else tuple(float(h) for h in band_spacing)
        self.orderings = sweep_orderings(grid.dim)
        self.residuals: List[float] = []
        self._previous: Optional[np.ndarray] = None
        self.timings: Dict[str, float] = {}

        hamiltonian = spec.hamiltonian
        rhs = spec.rhs_on(grid)
        self._rhs = rhs.reshape(tuple(rhs.shape) + (1,) * (3 - rhs.ndim))
        self._spacing = as_kernel_array(grid.spacing)
        self._alpha = np.zeros(3)
        self._alpha[: grid.dim] = hamiltonian.alpha
        self._drift = np.zeros(3)
        self._drift[: grid.dim] = hamiltonian.drift
        self._speed = hamiltonian.speed
        # c = gamma / sum_i(alpha_i / h_i)
        self.step = config.gamma / float(np.sum(np.asarray(hamiltonian.alpha) / np.asarray(grid.spacing)))

    def _reverse_flags(self, ordering: Sequence[bool]) -> np.ndarray:
        if len(ordering) != self.grid.dim:
            raise ConfigurationError(
                f"ordering {tuple(ordering)} does not match {self.grid.dim} axes"
            )
        flags = np.zeros(3, dtype=np.bool_)
        flags[: self.grid.dim] = ordering
        return flags

    def _check_finite(self, field: ScalarField, iteration: int) -> None:
        if np.isfinite(field.values).all():
            return
        point = tuple(int(i) for i in np.argwhere(~np.isfinite(field.values))[0])
        logger.warning("Non-finite value at %s in sweep %d", point, iteration)
        raise DivergenceError(point, iteration)

    def _check_growth(self, field: ScalarField, iteration: int, baseline: float) -> None:
        limit = self.config.divergence_factor * baseline
        if baseline <= 0.0 or self.residuals[-1] <= limit:
            return
        point = field.max_change_point(self._previous)
        logger.warning(
            "Residual %.3e in sweep %d exceeds %.3e on %s",
            self.residuals[-1], iteration, limit, self.grid.describe(),
        )
        raise DivergenceError(point, iteration, "residual growth")

    def band(self) -> Tuple[np.ndarray, np.ndarray]:
        """Mask and values of the pinned Gamma band on this grid."""
        spec, grid = self.spec, self.grid
        if spec.has_exact:
            fixed = spec.boundary.band_mask(grid, self.config.band_width, self.band_spacing)
            values = np.where(fixed, spec.exact_on(grid), 0.0)
            return fixed, values

        if spec.boundary.extended_members():
            raise ConfigurationError(
                f"problem '{spec.name}' needs an exact solution to fill its boundary band"
            )
        # Source bands take the straight-line travel time from the nearest source.
        fixed = spec.boundary.band_mask(grid, self.config.band_width, self.band_spacing)
        values = np.full(grid.shape, np.inf)
        hamiltonian = spec.hamiltonian
        drift = np.asarray(hamiltonian.drift, dtype=float)
        mesh = np.stack(np.broadcast_arrays(*grid.mesh()))
        for member in spec.boundary.point_members():
            source = np.asarray(member.position).reshape((grid.dim,) + (1,) * grid.dim)
            rate = float(np.asarray(spec.rhs(*member.position), dtype=float))
            arrival = spec.boundary.value_at(member.position) + rate * _travel_time(
                hamiltonian.speed, drift, mesh - source
            )
            values = np.minimum(values, arrival)
        return fixed, np.where(fixed, values, 0.0)

    def pinned_field(self) -> ScalarField:
        """Band values pinned, every other point at the initial guess."""
        fixed, band_values = self.band()
        if not fixed.any():
            raise ConfigurationError(
                f"no grid point of {self.grid.describe()} lies in the boundary band"
            )
        if fixed.all():
            raise ConfigurationError(
                f"the boundary band covers all of {self.grid.describe()}; refine the grid"
            )
        values = np.where(fixed, band_values, self.config.initial_guess)
        return ScalarField(self.grid, values, fixed)

    def initialize(self) -> ScalarField:
        """Pinned band plus, when enabled, the first-order warm start."""
        started = time.perf_counter()
        field = self.pinned_field()
        self.timings["init"] = time.perf_counter() - started
        if not self.config.warm_start:
            self.timings["warm_start"] = 0.0
            return field

        started = time.perf_counter()
        warm = FastSweeper(self.spec, self.grid, self.config.first_order(), self.band_spacing)
        field, iterations = warm.solve(field)
        self.timings["warm_start"] = time.perf_counter() - started
        logger.debug(
            "First-order warm start on %s: %d sweeps, residual %.3e",
            self.grid.describe(), iterations, warm.residuals[-1] if warm.residuals else 0.0,
        )
        return field

    def sweep(self, field: ScalarField, ordering: Sequence[bool], iteration: int = 0) -> float:
        """Both RK stages in one ordering; returns the L-infinity change."""
        if field.grid is not self.grid and not field.grid.same_points(self.grid):
            raise ConfigurationError("field does not live on the sweeper's grid")
        reverse = self._reverse_flags(ordering)
        before = field.values.copy()
        self._previous = before
        phi, fixed = field.volume_views()
        mode = self.config.derivative_mode.code
        for step in (self.step, 0.5 * self.step):
            rk_stage_pass(
                phi, fixed, self._rhs, self.grid.dim, self._spacing, self._alpha,
                self._speed, self._drift, step, self.config.epsilon, mode, reverse,
            )
            self._check_finite(field, iteration)
        return field.max_change(before)

    def stage_increment(self, field: ScalarField, index: Sequence[int]) -> float:
        """The stage-1 change one update would apply at ``index``, without applying it."""
        phi, _ = field.volume_views()
        i, j, k = tuple(index) + (0,) * (3 - len(index))
        return float(single_point_update(
            phi, self._rhs, i, j, k, self.grid.dim, self._spacing, self._alpha,
            self._speed, self._drift, self.step, self.config.epsilon,
            self.config.derivative_mode.code,
        ))

    def solve(
        self,
        field: Optional[ScalarField] = None,
        start_ordering: int = 0,
    ) -> Tuple[ScalarField, int]:
        """
        Sweep until the change of one sweep is at most ``delta``.

        Args:
            field: Starting field, initialized from the problem when omitted
            start_ordering: Index of the ordering that opens the cycle

        Returns:
            The converged field and the number of sweeps
        """
        if field is None:
            field = self.initialize()
        else:
            field = field.copy()
        cfg = self.config
        count = len(self.orderings)
        self.residuals = []
        started = time.perf_counter()
        residual = float("inf")
        baseline = None
        for iteration in range(1, cfg.max_iterations + 1):
            ordering = self.orderings[(start_ordering + iteration - 1) % count]
            residual = self.sweep(field, ordering, iteration)
            self.residuals.append(residual)
            if baseline is not None:
                self._check_growth(field, iteration, baseline)
            elif iteration == count:
                baseline = max(self.residuals)
            if iteration % count == 0:
                logger.debug("Sweep %d (%s): residual %.3e", iteration, cfg.derivative_mode.value, residual)
            if residual <= cfg.delta:
                self.timings["sweeps"] = time.perf_counter() - started
                return field, iteration

        self.timings["sweeps"] = time.perf_counter() - started
        logger.warning(
            "No convergence on %s after %d sweeps (residual %.3e)",
            self.grid.describe(), cfg.max_iterations, residual,
        )
        raise NonConvergenceError(residual, cfg.max_iterations, cfg.delta)


def initialize(spec: ProblemSpec, grid: CartesianGrid, cfg: SweepConfig) -> ScalarField:
    """Pin the Gamma band and warm-start the rest with first-order sweeps."""
    return FastSweeper(spec, grid, cfg).initialize()


def rk_iteration(
    field: ScalarField,
    spec: ProblemSpec,
    cfg: SweepConfig,
    ordering: Sequence[bool],
) -> float:
    """One two-stage Gauss-Seidel sweep in ``ordering``, in place."""
    return FastSweeper(spec, field.grid, cfg).sweep(field, ordering)


def solve_single_grid(
    spec: ProblemSpec,
    grid: CartesianGrid,
    cfg: SweepConfig,
    start_ordering: int = 0,
) -> Tuple[ScalarField, int]:
    """
    Initialize and sweep to convergence on one grid.

    Returns:
        The converged field and the number of high-order sweeps
    """
    started = time.perf_counter()
    sweeper = FastSweeper(spec, grid, cfg)
    field, iterations = sweeper.solve(start_ordering=start_ordering)
    logger.info(
        "Solved %s on %s (%s): %d sweeps in %.2fs",
        spec.name, grid.describe(), cfg.derivative_mode.value, iterations,
        time.perf_counter() - started,
    )
    return field, iterations
