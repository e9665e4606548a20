"""Run configuration: the pydantic model, per-example defaults and TOML files."""

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..exceptions import ConfigurationError
from ..interp import ProlongationMethod
from ..problem import ProblemSpec, make_benchmark, make_custom_problem, parse_case
from ..sweeper import DerivativeMode, SweepConfig

# Sections of a config file; everything but [custom] is flattened into RunConfig fields.
FILE_SECTIONS = ("problem", "solver", "sparse", "output")

DEFAULT_SINGLE_CELLS = {2: 160, 3: 80}
DEFAULT_ROOT_CELLS = {2: 20, 3: 10}


class RunMode(str, Enum):
    SINGLE = "single"
    SPARSE = "sparse"


class CustomProblem(BaseModel):
    """Point-source problem with a constant right-hand side."""
    model_config = ConfigDict(frozen=True)

    origin: List[float] = Field(..., min_length=2, max_length=3, description="Lower domain corner")
    extent: List[float] = Field(..., min_length=2, max_length=3, description="Domain edge lengths")
    sources: List[List[float]] = Field(..., min_length=1, description="Source positions (value 0)")
    speed: float = Field(1.0, gt=0.0, description="Speed F of |grad phi|")
    drift: Optional[List[float]] = Field(None, description="Drift vector; none for Eikonal")
    rhs: float = Field(1.0, gt=0.0, description="Constant right-hand side")
    gamma: float = Field(0.8, gt=0.0, le=1.0, description="Iteration parameter")
    name: str = Field("custom", description="Problem name in reports")

    def build(self) -> ProblemSpec:
        return make_custom_problem(
            self.origin, self.extent, self.sources, self.speed, self.drift,
            self.rhs, self.gamma, self.name,
        )


class RunConfig(BaseModel):
    """Everything one CLI or API run needs."""
    model_config = ConfigDict(frozen=True)

    example: Optional[int] = Field(None, ge=1, le=6, description="Benchmark id 1-6")
    case: Optional[str] = Field(None, description="2D or 3D for examples 5 and 6")
    custom: Optional[CustomProblem] = Field(None, description="Custom problem instead of a benchmark")
    mode: RunMode = Field(RunMode.SPARSE, description="Single full grid or sparse-grid combination")
    prolongation: Optional[ProlongationMethod] = Field(None, description="Prolongation method (per-example default)")
    derivative_mode: Optional[DerivativeMode] = Field(None, description="Derivative approximation (per-example default)")
    nh: Optional[int] = Field(None, ge=4, description="Cells per axis of the single grid")
    nr: Optional[int] = Field(None, ge=4, description="Cells per axis of the root grid")
    nl: int = Field(3, ge=1, description="Finest refinement level N_L")
    gamma: Optional[float] = Field(None, gt=0.0, le=1.0, description="Override of the problem's gamma")
    epsilon: float = Field(1e-6, gt=0.0, description="WENO regularization")
    delta: float = Field(1e-11, gt=0.0, description="Convergence threshold")
    first_order_delta: float = Field(1e-4, gt=0.0, description="Warm-start convergence threshold")
    max_iterations: int = Field(50_000, ge=1, description="Sweep limit per solve")
    workers: Optional[int] = Field(None, ge=1, description="Concurrent component solves")
    study: int = Field(1, ge=1, description="Rows of the refinement ladder")
    compare: bool = Field(False, description="Also solve the single grid at the sparse target resolution")
    table_out: Optional[Path] = Field(None, description="CSV table path")
    field_out: Optional[Path] = Field(None, description="Field dump path")
    timing_out: Optional[Path] = Field(None, description="Timing record path (JSON)")
    log_level: str = Field("INFO", description="Logging level of the CLI")

    @model_validator(mode="after")
    def _check_problem(self) -> "RunConfig":
        if (self.example is None) == (self.custom is None):
            raise ValueError("exactly one of example and custom must be given")
        if self.case is not None:
            parse_case(self.case)
        if self.custom is not None and len(self.custom.origin) != len(self.custom.extent):
            raise ValueError("custom origin and extent need the same number of axes")
        if self.mode == RunMode.SPARSE and self.dim == 3 and self.nl < 2:
            raise ValueError("3D sparse runs need nl >= 2")
        return self

    @property
    def dim(self) -> int:
        if self.custom is not None:
            return len(self.custom.origin)
        if self.example == 3:
            return 3
        if self.example in (5, 6):
            return parse_case(self.case) or 2
        return 2

    def problem(self) -> ProblemSpec:
        if self.custom is not None:
            return self.custom.build()
        return make_benchmark(self.example, self.case)

    def resolved_derivative_mode(self) -> DerivativeMode:
        if self.derivative_mode is not None:
            return self.derivative_mode
        return DerivativeMode.LINEAR3 if self.example == 1 else DerivativeMode.WENO3

    def resolved_prolongation(self) -> ProlongationMethod:
        if self.prolongation is not None:
            return self.prolongation
        if self.example in (1, 2):
            return ProlongationMethod.LAGRANGE
        return ProlongationMethod.WENO

    def base_cells(self) -> int:
        """N of the first ladder row: N_h in single mode, N_r in sparse mode."""
        if self.mode == RunMode.SINGLE:
            return self.nh or DEFAULT_SINGLE_CELLS[self.dim]
        return self.nr or DEFAULT_ROOT_CELLS[self.dim]

    def sweep_config(self, spec: ProblemSpec) -> SweepConfig:
        return SweepConfig.for_problem(
            spec,
            gamma=self.gamma,
            epsilon=self.epsilon,
            delta=self.delta,
            first_order_delta=self.first_order_delta,
            max_iterations=self.max_iterations,
            derivative_mode=self.resolved_derivative_mode(),
        )

    def label(self) -> str:
        name = f"example {self.example}" if self.custom is None else self.custom.name
        if self.case:
            name += f" ({self.case})"
        return name


def flatten_sections(document: Mapping[str, Any]) -> Dict[str, Any]:
    """Merge the known sections of a parsed config file into one flat mapping."""
    values: Dict[str, Any] = {}
    for key, item in document.items():
        if key in FILE_SECTIONS:
            if not isinstance(item, Mapping):
                raise ConfigurationError(f"[{key}] must be a table")
            values.update(item)
        elif key == "custom":
            values["custom"] = dict(item)
        else:
            values[key] = item
    return values


def load_config(path: Union[str, Path]) -> Dict[str, Any]:
    """Read a TOML run file into flat RunConfig field values."""
    try:
        with open(path, "rb") as handle:
            document = tomllib.load(handle)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigurationError(f"cannot parse {path}: {exc}") from exc
    return flatten_sections(document)


def build_run_config(
    file_values: Optional[Mapping[str, Any]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """File values overridden by explicitly given flags (``None`` means not given)."""
    merged = dict(file_values or {})
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return RunConfig(**merged)
