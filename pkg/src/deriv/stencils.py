"""One-sided derivative approximations along a grid line.

The scalar kernels are compiled with numba so the sweeping kernels can call
them point by point; the ``StencilLine`` wrappers are the Python-facing API.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numba as nb
import numpy as np

from ..exceptions import ConfigurationError

_numba_setting = {"nogil": True, "cache": True}

LINEAR_WEIGHT = 1.0 / 3.0


@nb.njit(**_numba_setting)
def weno3_weight(num_diff2: float, den_diff2: float, eps: float) -> float:
    """w = 1 / (1 + 2 r^2) with r = (eps + a^2) / (eps + b^2)."""
    r = (eps + num_diff2 * num_diff2) / (eps + den_diff2 * den_diff2)
    return 1.0 / (1.0 + 2.0 * r * r)


@nb.njit(**_numba_setting)
def biased_minus(m2: float, m1: float, c: float, p1: float, h: float, w: float) -> float:
    central = (p1 - m1) / (2.0 * h)
    upwind = (3.0 * c - 4.0 * m1 + m2) / (2.0 * h)
    return (1.0 - w) * central + w * upwind


@nb.njit(**_numba_setting)
def biased_plus(m1: float, c: float, p1: float, p2: float, h: float, w: float) -> float:
    central = (p1 - m1) / (2.0 * h)
    upwind = (-p2 + 4.0 * p1 - 3.0 * c) / (2.0 * h)
    return (1.0 - w) * central + w * upwind


@nb.njit(**_numba_setting)
def weno3_minus_value(m2: float, m1: float, c: float, p1: float, h: float, eps: float) -> float:
    w = weno3_weight(c - 2.0 * m1 + m2, p1 - 2.0 * c + m1, eps)
    return biased_minus(m2, m1, c, p1, h, w)


@nb.njit(**_numba_setting)
def weno3_plus_value(m1: float, c: float, p1: float, p2: float, h: float, eps: float) -> float:
    w = weno3_weight(p2 - 2.0 * p1 + c, p1 - 2.0 * c + m1, eps)
    return biased_plus(m1, c, p1, p2, h, w)


@nb.njit(**_numba_setting)
def ghost_value(v0: float, v1: float, v2: float, distance: int) -> float:
    """Quadratic through (0, v0), (1, v1), (2, v2) evaluated at -distance."""
    if distance == 1:
        return 3.0 * v0 - 3.0 * v1 + v2
    return 6.0 * v0 - 8.0 * v1 + 3.0 * v2


@dataclass(frozen=True)
class StencilLine:
    """Four consecutive line values ordered by increasing coordinate.

    For the minus side these are the points i-2..i+1, for the plus side
    i-1..i+2.
    """

    values: Tuple[float, float, float, float]
    spacing: float
    epsilon: float = 1e-6

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.values) != 4:
            raise ConfigurationError(f"a stencil line holds 4 values, got {len(self.values)}")
        if self.spacing <= 0.0:
            raise ConfigurationError(f"spacing must be positive, got {self.spacing}")
        if self.epsilon <= 0.0:
            raise ConfigurationError(f"epsilon must be positive, got {self.epsilon}")


def weno3_minus(s: StencilLine) -> float:
    """Third-order WENO approximation when the wind blows left to right."""
    return float(weno3_minus_value(*s.values, s.spacing, s.epsilon))


def weno3_plus(s: StencilLine) -> float:
    """Third-order WENO approximation when the wind blows right to left."""
    return float(weno3_plus_value(*s.values, s.spacing, s.epsilon))


def weno3_weights(s: StencilLine) -> Tuple[float, float]:
    """Nonlinear weights (w_minus, w_plus) of the stencil read both ways."""
    v0, v1, v2, v3 = s.values
    w_minus = weno3_weight(v2 - 2.0 * v1 + v0, v3 - 2.0 * v2 + v1, s.epsilon)
    w_plus = weno3_weight(v3 - 2.0 * v2 + v1, v2 - 2.0 * v1 + v0, s.epsilon)
    return float(w_minus), float(w_plus)


def linear3_pair(s: StencilLine, side: str = "minus") -> float:
    """Third-order linear upwind approximation (weight frozen at 1/3)."""
    if side == "minus":
        return float(biased_minus(*s.values, s.spacing, LINEAR_WEIGHT))
    if side == "plus":
        return float(biased_plus(*s.values, s.spacing, LINEAR_WEIGHT))
    raise ConfigurationError(f"side must be 'minus' or 'plus', got {side!r}")


def upwind1(left: float, right: float, h: float) -> float:
    """First-order one-sided difference between two line neighbors."""
    if h <= 0.0:
        raise ConfigurationError(f"spacing must be positive, got {h}")
    return (right - left) / h


def extrapolate_ghost(interior: Sequence[float], count: int = 2) -> Tuple[float, ...]:
    """
    Ghost values beyond a domain boundary.

    Args:
        interior: The three line values nearest the boundary, boundary first
        count: Number of ghost points (1 or 2)

    Returns:
        Ghost values at distance 1, then 2, outside the boundary point
    """
    if len(interior) != 3:
        raise ConfigurationError(f"extrapolation uses 3 interior values, got {len(interior)}")
    if count not in (1, 2):
        raise ConfigurationError(f"count must be 1 or 2, got {count}")
    v0, v1, v2 = (float(v) for v in interior)
    return tuple(float(ghost_value(v0, v1, v2, d)) for d in range(1, count + 1))


def derivative_samples(values: np.ndarray, spacing: float, epsilon: float = 1e-6) -> np.ndarray:
    """WENO minus-side derivatives at every point of a 1D array with ghost extrapolation.

    Used for convergence checks on smooth line data.
    """
    values = np.asarray(values, dtype=float)
    n = values.size
    if n < 3:
        raise ConfigurationError("need at least 3 line values")
    left = extrapolate_ghost(values[:3], 2)
    right = extrapolate_ghost(values[::-1][:3], 1)
    padded = np.concatenate([[left[1], left[0]], values, [right[0]]])
    return np.array([
        weno3_minus_value(padded[k], padded[k + 1], padded[k + 2], padded[k + 3], spacing, epsilon)
        for k in range(n)
    ])
