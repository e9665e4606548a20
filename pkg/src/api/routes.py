"""API routes for benchmark listing, solves and streamed refinement studies."""

import json
import logging
import time
from typing import List, Optional

from fastapi import APIRouter, HTTPException
from fastapi.concurrency import run_in_threadpool
from fastapi.responses import StreamingResponse
from pydantic import ValidationError

from ..analysis import RefinementStudy
from ..cli.config import RunConfig, RunMode
from ..cli.runner import RunReport, run_config
from ..exceptions import ConfigurationError, SweepingError
from ..problem import list_benchmarks
from .models import BenchmarkInfo, BenchmarksResponse, SolveRequest, StudyStreamMeta

logger = logging.getLogger(__name__)

router = APIRouter()

# Benchmark catalog (initialized on startup)
catalog: Optional[List[BenchmarkInfo]] = None


def initialize_catalog() -> List[BenchmarkInfo]:
    """Build the benchmark catalog served by /benchmarks."""
    global catalog
    catalog = [BenchmarkInfo(**entry) for entry in list_benchmarks()]
    return catalog


def _sse(event: str, data: dict) -> str:
    """Format Server-Sent Event."""
    return f"event: {event}\ndata: {json.dumps(data, ensure_ascii=False)}\n\n"


def _run_config(request: SolveRequest) -> RunConfig:
    try:
        return request.to_run_config()
    except (ConfigurationError, ValidationError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@router.get("/benchmarks", response_model=BenchmarksResponse)
async def benchmarks():
    """List the benchmark problems."""
    if catalog is None:
        raise HTTPException(status_code=503, detail="Benchmark catalog not initialized")
    return BenchmarksResponse(benchmarks=catalog)


@router.post("/solve", response_model=RunReport)
async def solve(request: SolveRequest):
    """
    Run one solve (or a refinement ladder) and return the report.
    """
    cfg = _run_config(request)
    try:
        return await run_in_threadpool(run_config, cfg)
    except ConfigurationError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except SweepingError as exc:
        logger.error("Solve failed: %s", exc)
        raise HTTPException(status_code=500, detail=str(exc))


@router.post("/study_stream")
async def study_stream(request: SolveRequest):
    """
    Stream a refinement study row by row.
    """
    cfg = _run_config(request)
    size_field = "nh" if cfg.mode == RunMode.SINGLE else "nr"

    def generate():
        t0 = time.perf_counter()
        study = RefinementStudy()
        n = cfg.base_cells()
        problem = cfg.label()
        try:
            problem = cfg.problem().name
        except ConfigurationError as exc:
            yield _sse("done", {"error": str(exc)})
            return

        meta = StudyStreamMeta(problem=problem, mode=cfg.mode.value, rows=cfg.study, base_cells=n)
        yield _sse("meta", meta.model_dump())

        for _ in range(cfg.study):
            single_row = cfg.model_copy(update={size_field: n, "study": 1, "compare": False})
            try:
                report = run_config(single_row)
            except SweepingError as exc:
                yield _sse("done", {"error": str(exc), "rows": len(study.rows)})
                return
            if not study.rows:
                study.mode = report.study.mode
            record = report.records[0]
            row = study.add(n, record.l1, record.linf, record.iterations, record.wall_time)
            yield _sse("row", row.model_dump())
            n *= 2

        total_ms = int((time.perf_counter() - t0) * 1000)
        yield _sse("done", {"rows": len(study.rows), "ms_total": total_ms})

    headers = {
        "Cache-Control": "no-cache",
        "Connection": "keep-alive",
        "X-Accel-Buffering": "no",
    }
    return StreamingResponse(generate(), media_type="text/event-stream", headers=headers)
