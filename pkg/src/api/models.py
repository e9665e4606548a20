"""Request and response models for the solver API."""

from typing import List, Optional

from pydantic import BaseModel, Field

from ..cli.config import CustomProblem, RunConfig, RunMode
from ..interp import ProlongationMethod
from ..sweeper import DerivativeMode


class SolveRequest(BaseModel):
    """Request model for solve and study endpoints."""
    example: Optional[int] = Field(None, ge=1, le=6, description="Benchmark id 1-6")
    case: Optional[str] = Field(None, description="2D or 3D for examples 5 and 6")
    custom: Optional[CustomProblem] = Field(None, description="Custom point-source problem")
    mode: RunMode = Field(RunMode.SPARSE, description="single or sparse")
    prolongation: Optional[ProlongationMethod] = Field(None, description="Prolongation method")
    derivative_mode: Optional[DerivativeMode] = Field(None, description="Derivative approximation")
    nh: Optional[int] = Field(None, ge=4, le=2560, description="Cells per axis of the single grid")
    nr: Optional[int] = Field(None, ge=4, le=320, description="Cells per axis of the root grid")
    nl: int = Field(3, ge=1, le=6, description="Finest refinement level")
    gamma: Optional[float] = Field(None, gt=0.0, le=1.0, description="Override of the problem's gamma")
    epsilon: float = Field(1e-6, gt=0.0, description="WENO regularization")
    delta: float = Field(1e-11, gt=0.0, description="Convergence threshold")
    first_order_delta: float = Field(1e-4, gt=0.0, description="Warm-start convergence threshold")
    max_iterations: int = Field(50_000, ge=1, description="Sweep limit per solve")
    workers: Optional[int] = Field(None, ge=1, le=64, description="Concurrent component solves")
    study: int = Field(1, ge=1, le=5, description="Rows of the refinement ladder")
    compare: bool = Field(False, description="Compare with the single grid at the target resolution")

    def to_run_config(self) -> RunConfig:
        return RunConfig(**self.model_dump(exclude_none=True))


class BenchmarkInfo(BaseModel):
    """One entry of the benchmark catalog."""
    id: int = Field(..., description="Benchmark id")
    case: Optional[str] = Field(None, description="2D/3D case label")
    name: str
    dim: int
    gamma: float
    has_exact: bool
    description: str = ""


class BenchmarksResponse(BaseModel):
    benchmarks: List[BenchmarkInfo] = Field(default_factory=list)


class StudyStreamMeta(BaseModel):
    """First event of a streamed study."""
    problem: str
    mode: str
    rows: int
    base_cells: int
