"""
Sparse-grid combination solve.

Each component grid of a plan is initialized and swept independently, the
converged fields are prolongated to the finest grid and summed with their
combination coefficients.
"""

import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import (
    ComponentSolveError,
    ConfigurationError,
    DivergenceError,
    GridMismatchError,
    NonConvergenceError,
)
from ..grid import CartesianGrid, PlanEntry, SparsePlan
from ..interp import ProlongationMethod, prolongate
from ..problem import ProblemSpec
from ..sweeper import FastSweeper, ScalarField, SweepConfig

logger = logging.getLogger(__name__)

PHASES = ("init", "warm_start", "sweeps", "prolongation", "combination")


@dataclass(frozen=True)
class ComponentReport:
    """Telemetry of one component grid solve."""

    levels: Tuple[int, ...]
    coefficient: int
    iterations: int
    wall_time: float
    points: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "levels": list(self.levels),
            "coefficient": self.coefficient,
            "iterations": self.iterations,
            "wall_time": self.wall_time,
            "points": self.points,
        }


@dataclass
class SparseSolveResult:
    combined: ScalarField
    components: List[ComponentReport]
    timings: Dict[str, float] = field(default_factory=dict)
    component_fields: Optional[List[ScalarField]] = None

    @property
    def iterations(self) -> int:
        """Sweeps summed over all components."""
        return sum(c.iterations for c in self.components)

    @property
    def solve_time(self) -> float:
        return sum(self.timings.get(phase, 0.0) for phase in ("init", "warm_start", "sweeps"))


def combine_fields(prolonged: Sequence[Tuple[ScalarField, float]]) -> ScalarField:
    """
    Pointwise sum of coefficient-weighted fields on one grid.

    The sum runs in the given order so repeated calls are bit-identical.
    """
    if not prolonged:
        raise ConfigurationError("nothing to combine")
    grid = prolonged[0][0].grid
    total = np.zeros(grid.shape)
    for component, coefficient in prolonged:
        if component.grid is not grid and not component.grid.same_points(grid):
            raise GridMismatchError(
                f"cannot combine a field on {component.grid.describe()} with one on {grid.describe()}"
            )
        total += coefficient * component.values
    return ScalarField(grid, total, np.zeros(grid.shape, dtype=bool))


def _default_workers(count: int) -> int:
    return max(1, min(count, os.cpu_count() or 1))


def _solve_component(
    spec: ProblemSpec,
    grid: CartesianGrid,
    cfg: SweepConfig,
    band_spacing: Optional[Tuple[float, ...]] = None,
) -> Tuple[ScalarField, int, Dict[str, float], float]:
    started = time.perf_counter()
    sweeper = FastSweeper(spec, grid, cfg, band_spacing)
    solved, iterations = sweeper.solve()
    return solved, iterations, dict(sweeper.timings), time.perf_counter() - started


def solve_sparse(
    spec: ProblemSpec,
    plan: SparsePlan,
    cfg: SweepConfig,
    method: ProlongationMethod = ProlongationMethod.LAGRANGE,
    workers: Optional[int] = None,
    keep_components: bool = False,
    on_component: Optional[Callable[[ComponentReport], None]] = None,
    shared_band: bool = True,
) -> SparseSolveResult:
    """
    Solve on every grid of ``plan`` and combine onto the finest grid.

    Args:
        spec: Problem to solve
        plan: Semi-coarsened grid family for the problem's domain
        cfg: Sweep configuration shared by every component
        method: Prolongation method
        workers: Concurrent component solves; defaults to the CPU count
        keep_components: Retain the prolongated component fields
        on_component: Called with each component report as it completes
        shared_band: Pin the same band, measured in root-grid cells, on every component

    Returns:
        SparseSolveResult with the combined field in the finest grid

    Raises:
        ComponentSolveError: if any component fails to converge
    """
    if plan.dim != spec.dim:
        raise ConfigurationError(f"plan has {plan.dim} axes, problem has {spec.dim}")
    if not (
        np.allclose(plan.domain.origin, spec.domain.origin)
        and np.allclose(plan.domain.extent, spec.domain.extent)
    ):
        raise ConfigurationError("plan domain differs from the problem domain")
    method = ProlongationMethod(method)
    workers = _default_workers(len(plan.entries)) if workers is None else workers
    if workers < 1:
        raise ConfigurationError(f"workers must be at least 1, got {workers}")

    started = time.perf_counter()
    grids = plan.grids()
    band_spacing = plan.grid_for((0,) * plan.dim).spacing if shared_band else None
    solved: Dict[int, Tuple[ScalarField, int, Dict[str, float], float]] = {}

    def record(index: int, outcome) -> None:
        entry: PlanEntry = plan.entries[index]
        solved[index] = outcome
        report = ComponentReport(entry.levels, entry.coefficient, outcome[1], outcome[3], grids[index].size)
        logger.info(
            "Component %s (coefficient %+d): %d sweeps in %.2fs",
            entry.levels, entry.coefficient, report.iterations, report.wall_time,
        )
        if on_component is not None:
            on_component(report)

    def failed(index: int, exc: Exception) -> ComponentSolveError:
        return ComponentSolveError(plan.entries[index].levels, str(exc))

    if workers == 1:
        for index, grid in enumerate(grids):
            try:
                record(index, _solve_component(spec, grid, cfg, band_spacing))
            except (NonConvergenceError, DivergenceError) as exc:
                raise failed(index, exc) from exc
    else:
        executor = ThreadPoolExecutor(max_workers=workers)
        futures = {
            executor.submit(_solve_component, spec, grid, cfg, band_spacing): index
            for index, grid in enumerate(grids)
        }
        try:
            for future in as_completed(futures):
                index = futures[future]
                try:
                    record(index, future.result())
                except (NonConvergenceError, DivergenceError) as exc:
                    raise failed(index, exc) from exc
        except BaseException:
            # Running components finish in the background; queued ones are dropped.
            executor.shutdown(wait=False, cancel_futures=True)
            raise
        executor.shutdown(wait=True)

    timings = {phase: 0.0 for phase in PHASES}
    for _, _, component_timings, _ in solved.values():
        for phase in ("init", "warm_start", "sweeps"):
            timings[phase] += component_timings.get(phase, 0.0)

    target = plan.finest_grid()
    phase_start = time.perf_counter()
    prolonged = [
        (prolongate(solved[index][0], target, method, cfg.epsilon), entry.coefficient)
        for index, entry in enumerate(plan.entries)
    ]
    timings["prolongation"] = time.perf_counter() - phase_start

    phase_start = time.perf_counter()
    combined = combine_fields(prolonged)
    combined = ScalarField(target, combined.values, FastSweeper(spec, target, cfg, band_spacing).band()[0])
    timings["combination"] = time.perf_counter() - phase_start
    timings["total"] = time.perf_counter() - started

    components = [
        ComponentReport(entry.levels, entry.coefficient, solved[i][1], solved[i][3], grids[i].size)
        for i, entry in enumerate(plan.entries)
    ]
    logger.info(
        "Sparse solve of %s: %d components onto %s in %.2fs",
        spec.name, len(components), target.describe(), timings["total"],
    )
    return SparseSolveResult(
        combined=combined,
        components=components,
        timings=timings,
        component_fields=[f for f, _ in prolonged] if keep_components else None,
    )
