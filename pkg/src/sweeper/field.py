"""Grid fields and sweeping configuration."""

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import ConfigurationError
from ..grid import CartesianGrid

if TYPE_CHECKING:
    from ..problem import ProblemSpec


class DerivativeMode(str, Enum):
    """One-sided derivative approximation used inside the numerical Hamiltonian."""

    FIRST_ORDER = "first-order"
    WENO3 = "weno3"
    LINEAR3 = "linear3"

    @property
    def code(self) -> int:
        return _MODE_CODES[self]


_MODE_CODES = {
    DerivativeMode.FIRST_ORDER: 0,
    DerivativeMode.WENO3: 1,
    DerivativeMode.LINEAR3: 2,
}


class SweepConfig(BaseModel):
    """Parameters of the fixed-point fast sweeping iteration."""

    model_config = ConfigDict(frozen=True)

    gamma: float = Field(..., gt=0.0, description="CFL-like step parameter")
    epsilon: float = Field(1e-6, gt=0.0, description="WENO regularization")
    delta: float = Field(1e-11, gt=0.0, description="Convergence threshold of the high-order sweeps")
    first_order_delta: float = Field(1e-4, gt=0.0, description="Convergence threshold of the first-order warm start")
    max_iterations: int = Field(50_000, ge=1, description="Sweep limit per solve")
    derivative_mode: DerivativeMode = Field(DerivativeMode.WENO3, description="Derivative approximation")
    initial_guess: float = Field(10.0, description="Start value away from Gamma for the warm start")
    band_width: int = Field(2, ge=0, description="Gamma band radius in cells (m - 1)")
    warm_start: bool = Field(True, description="Run the first-order sweeps before the high-order ones")
    divergence_factor: float = Field(
        1e6, gt=1.0, description="Residual growth over the first cycle that counts as divergence"
    )

    @classmethod
    def for_problem(cls, spec: "ProblemSpec", **overrides: Any) -> "SweepConfig":
        """Config with the problem's gamma unless overridden."""
        overrides = {k: v for k, v in overrides.items() if v is not None}
        overrides.setdefault("gamma", spec.gamma)
        return cls(**overrides)

    def first_order(self) -> "SweepConfig":
        """The warm-start variant: first-order derivatives, loose threshold."""
        return self.model_copy(update={
            "derivative_mode": DerivativeMode.FIRST_ORDER,
            "delta": self.first_order_delta,
            "warm_start": False,
        })


@dataclass
class ScalarField:
    """Solution values on a grid plus the mask of pinned Gamma-band points."""

    grid: CartesianGrid
    values: np.ndarray
    fixed: np.ndarray

    def __post_init__(self):
        self.values = np.require(self.values, dtype=np.float64, requirements=["C", "W"])
        self.fixed = np.require(self.fixed, dtype=np.bool_, requirements=["C", "W"])
        if self.values.shape != self.grid.shape or self.fixed.shape != self.grid.shape:
            raise ConfigurationError(
                f"field arrays {self.values.shape}/{self.fixed.shape} do not match grid {self.grid.shape}"
            )
        if not np.all(np.isfinite(self.values[self.fixed])):
            raise ConfigurationError("fixed values must be finite")

    @classmethod
    def constant(cls, grid: CartesianGrid, value: float) -> "ScalarField":
        return cls(grid, np.full(grid.shape, float(value)), np.zeros(grid.shape, dtype=bool))

    @property
    def free_count(self) -> int:
        return int(self.values.size - np.count_nonzero(self.fixed))

    def copy(self) -> "ScalarField":
        return ScalarField(self.grid, self.values.copy(), self.fixed.copy())

    def volume_views(self) -> Tuple[np.ndarray, np.ndarray]:
        """Values and mask viewed as 3D arrays (trailing unit axes for 1D/2D)."""
        shape = tuple(self.values.shape) + (1,) * (3 - self.values.ndim)
        return self.values.reshape(shape), self.fixed.reshape(shape)

    def max_change(self, previous: np.ndarray) -> float:
        """L-infinity difference to ``previous`` over non-fixed points."""
        free = ~self.fixed
        if not free.any():
            return 0.0
        return float(np.max(np.abs(self.values[free] - previous[free])))

    def max_change_point(self, previous: np.ndarray) -> Tuple[int, ...]:
        """Index of the largest change to ``previous`` over non-fixed points."""
        change = np.where(self.fixed, -1.0, np.abs(self.values - previous))
        return tuple(int(i) for i in np.unravel_index(int(np.argmax(change)), change.shape))
