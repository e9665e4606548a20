"""Execution of a RunConfig: refinement ladders, comparisons and outputs."""

import json
import logging
import time
from typing import Callable, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field

from ..analysis import RefinementStudy, StudyMode, StudyRow, emit_table, error_norms
from ..combine import solve_sparse
from ..grid import build_grid, semi_coarsened_family
from ..interp import ProlongationMethod
from ..problem import ProblemSpec
from ..sweeper import FastSweeper, ScalarField, SweepConfig
from .config import RunConfig, RunMode
from .field_io import dump_field

logger = logging.getLogger(__name__)


class TimingRecord(BaseModel):
    """Wall time per phase of one solve, in seconds."""
    label: str = Field(..., description="Which solve the phases belong to")
    n: int = Field(..., description="N_h or N_r of the solve")
    phases: Dict[str, float] = Field(default_factory=dict, description="init, warm_start, sweeps, ...")
    total: float = Field(0.0, ge=0.0)


class RunRecord(BaseModel):
    """Outcome of one rung of the refinement ladder."""
    n: int
    target_cells: int = Field(..., description="Cells per axis of the grid the result lives on")
    l1: Optional[float] = None
    linf: Optional[float] = None
    iterations: int = 0
    wall_time: float = 0.0
    components: List[dict] = Field(default_factory=list)


class ComparisonRecord(BaseModel):
    """Sparse against single grid on the common finest grid."""
    target_cells: int
    single_time: float
    sparse_time: float
    time_ratio: float = Field(..., description="sparse / single wall time")
    max_deviation: float = Field(..., description="max |sparse - single| over the grid")
    single_l1: Optional[float] = None
    single_linf: Optional[float] = None


class RunReport(BaseModel):
    problem: str
    dim: int
    mode: RunMode
    derivative_mode: str
    prolongation: Optional[str] = None
    gamma: float
    has_exact: bool
    records: List[RunRecord] = Field(default_factory=list)
    study: RefinementStudy
    timings: List[TimingRecord] = Field(default_factory=list)
    comparison: Optional[ComparisonRecord] = None
    outputs: Dict[str, str] = Field(default_factory=dict)


def _study_mode(cfg: RunConfig) -> StudyMode:
    if cfg.mode == RunMode.SINGLE:
        return StudyMode.SINGLE
    if cfg.resolved_prolongation() == ProlongationMethod.WENO:
        return StudyMode.SPARSE_WENO
    return StudyMode.SPARSE_LAGRANGE


def _norms(spec: ProblemSpec, field: ScalarField):
    if not spec.has_exact:
        return None, None
    return error_norms(field, spec.exact, per_volume=True)


def _solve_single(spec: ProblemSpec, cells: int, sweep: SweepConfig):
    grid = build_grid(spec.domain.origin, spec.domain.extent, (cells,) * spec.dim)
    started = time.perf_counter()
    sweeper = FastSweeper(spec, grid, sweep)
    field, iterations = sweeper.solve()
    total = time.perf_counter() - started
    logger.info("Single grid %s: %d sweeps in %.2fs", grid.describe(), iterations, total)
    return field, iterations, dict(sweeper.timings), total


def run_config(
    cfg: RunConfig,
    on_row: Optional[Callable[[StudyRow], None]] = None,
) -> RunReport:
    """
    Execute the solves ``cfg`` asks for and write its outputs.

    Args:
        cfg: Validated run configuration
        on_row: Called with each study row as soon as it is computed

    Returns:
        RunReport with per-row errors, timings and written paths
    """
    spec = cfg.problem()
    sweep = cfg.sweep_config(spec)
    method = cfg.resolved_prolongation()
    report = RunReport(
        problem=spec.name,
        dim=spec.dim,
        mode=cfg.mode,
        derivative_mode=sweep.derivative_mode.value,
        prolongation=method.value if cfg.mode == RunMode.SPARSE else None,
        gamma=sweep.gamma,
        has_exact=spec.has_exact,
        study=RefinementStudy(mode=_study_mode(cfg)),
    )
    study = report.study
    logger.info(
        "Running %s: %s mode, %s derivatives, gamma=%.3g",
        cfg.label(), cfg.mode.value, sweep.derivative_mode.value, sweep.gamma,
    )

    field: Optional[ScalarField] = None
    sparse_total = 0.0
    n = cfg.base_cells()
    for _ in range(cfg.study):
        if cfg.mode == RunMode.SINGLE:
            field, iterations, phases, total = _solve_single(spec, n, sweep)
            target_cells, components = n, []
            phases["total"] = total
        else:
            plan = semi_coarsened_family(spec.domain, n, cfg.nl)
            result = solve_sparse(spec, plan, sweep, method, workers=cfg.workers)
            field, iterations = result.combined, result.iterations
            phases, total = dict(result.timings), result.timings["total"]
            target_cells = plan.finest_grid().cells[0]
            components = [c.to_dict() for c in result.components]
            sparse_total = total

        l1, linf = _norms(spec, field)
        row = study.add(n, l1, linf, iterations, total)
        report.records.append(RunRecord(
            n=n, target_cells=target_cells, l1=l1, linf=linf,
            iterations=iterations, wall_time=total, components=components,
        ))
        report.timings.append(TimingRecord(label=study.mode.value, n=n, phases=phases, total=total))
        if on_row is not None:
            on_row(row)
        n *= 2

    if cfg.compare:
        if cfg.mode == RunMode.SPARSE:
            report.comparison = _compare(spec, sweep, field, sparse_total, report)
        else:
            logger.warning("--compare only applies to sparse runs; ignored")

    _write_outputs(cfg, report, field)
    return report


def _compare(
    spec: ProblemSpec,
    sweep: SweepConfig,
    sparse_field: ScalarField,
    sparse_time: float,
    report: RunReport,
) -> ComparisonRecord:
    cells = sparse_field.grid.cells[0]
    single, _, phases, single_time = _solve_single(spec, cells, sweep)
    phases["total"] = single_time
    report.timings.append(TimingRecord(label="single-reference", n=cells, phases=phases, total=single_time))
    l1, linf = _norms(spec, single)
    comparison = ComparisonRecord(
        target_cells=cells,
        single_time=single_time,
        sparse_time=sparse_time,
        time_ratio=sparse_time / single_time if single_time > 0.0 else float("nan"),
        max_deviation=float(np.max(np.abs(sparse_field.values - single.values))),
        single_l1=l1,
        single_linf=linf,
    )
    logger.info(
        "Sparse/single wall time %.2f (saved %.0f%%), max deviation %.3e",
        comparison.time_ratio, 100.0 * (1.0 - comparison.time_ratio), comparison.max_deviation,
    )
    return comparison


def _write_outputs(cfg: RunConfig, report: RunReport, field: Optional[ScalarField]) -> None:
    if cfg.table_out is not None:
        emit_table(report.study, cfg.table_out)
        report.outputs["table"] = str(cfg.table_out)
    if cfg.field_out is not None and field is not None:
        dump_field(field, cfg.field_out)
        report.outputs["field"] = str(cfg.field_out)
    if cfg.timing_out is not None:
        records = [t.model_dump() for t in report.timings]
        payload = {"timings": records}
        if report.comparison is not None:
            payload["comparison"] = report.comparison.model_dump()
        cfg.timing_out.write_text(json.dumps(payload, indent=2))
        report.outputs["timing"] = str(cfg.timing_out)
    for kind, path in report.outputs.items():
        logger.info("Wrote %s to %s", kind, path)
