"""Refinement studies and their CSV tables."""

import csv
import io
import logging
import math
from enum import Enum
from pathlib import Path
from typing import IO, List, Optional, Union

from pydantic import BaseModel, Field

from ..exceptions import ConfigurationError

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ("N", "L1", "L1-order", "Linf", "Linf-order", "CPU-seconds")
MISSING = "-"


class StudyMode(str, Enum):
    SINGLE = "single"
    SPARSE_LAGRANGE = "sparse-lagrange"
    SPARSE_WENO = "sparse-weno"


class StudyRow(BaseModel):
    """One grid of a refinement study."""
    n: int = Field(..., ge=1, description="N_h for single grids, N_r for sparse grids")
    l1: Optional[float] = Field(None, ge=0.0, description="L1 error")
    l1_order: Optional[float] = Field(None, description="L1 order against the previous row")
    linf: Optional[float] = Field(None, ge=0.0, description="L-infinity error")
    linf_order: Optional[float] = Field(None, description="L-infinity order against the previous row")
    iterations: int = Field(0, ge=0, description="Sweeps (summed over components for sparse runs)")
    wall_time: float = Field(0.0, ge=0.0, description="Total wall time in seconds")


class RefinementStudy(BaseModel):
    """A 'refine root grid' ladder: N doubles from row to row."""
    mode: StudyMode = Field(StudyMode.SINGLE, description="Single grid or sparse with a prolongation method")
    rows: List[StudyRow] = Field(default_factory=list)

    def add(
        self,
        n: int,
        l1: Optional[float],
        linf: Optional[float],
        iterations: int = 0,
        wall_time: float = 0.0,
    ) -> StudyRow:
        """Append a row, deriving orders from the previous one."""
        if self.rows and n != 2 * self.rows[-1].n:
            raise ConfigurationError(f"N must double between rows: {self.rows[-1].n} -> {n}")
        previous = self.rows[-1] if self.rows else None
        row = StudyRow(
            n=n,
            l1=l1,
            l1_order=_order(previous.l1 if previous else None, l1),
            linf=linf,
            linf_order=_order(previous.linf if previous else None, linf),
            iterations=iterations,
            wall_time=wall_time,
        )
        self.rows.append(row)
        logger.info(
            "%s N=%d: L1=%s Linf=%s (%d sweeps, %.2fs)",
            self.mode.value, n, _format_error(l1), _format_error(linf), iterations, wall_time,
        )
        return row


def _order(coarse: Optional[float], fine: Optional[float]) -> Optional[float]:
    if coarse is None or fine is None or coarse <= 0.0 or fine <= 0.0:
        return None
    return math.log2(coarse / fine)


def _format_error(value: Optional[float]) -> str:
    return MISSING if value is None else f"{value:.2e}"


def _format_order(value: Optional[float]) -> str:
    return MISSING if value is None else f"{value:.2f}"


def emit_table(study: RefinementStudy, sink: Union[str, Path, IO[str], None] = None) -> str:
    """
    Write the study as CSV.

    Args:
        study: Nonempty refinement study
        sink: Path or text stream; the table is only returned when omitted

    Returns:
        The CSV text
    """
    if not study.rows:
        raise ConfigurationError("cannot emit an empty refinement study")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for row in study.rows:
        writer.writerow([
            row.n,
            _format_error(row.l1),
            _format_order(row.l1_order),
            _format_error(row.linf),
            _format_order(row.linf_order),
            f"{row.wall_time:.3f}",
        ])
    text = buffer.getvalue()
    if isinstance(sink, (str, Path)):
        Path(sink).write_text(text)
    elif sink is not None:
        sink.write(text)
    return text
