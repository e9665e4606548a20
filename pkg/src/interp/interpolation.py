"""Three-point Lagrange and WENO interpolation along one axis."""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..exceptions import ConfigurationError


@dataclass(frozen=True)
class InterpPoint:
    """Target ``x = x_{i-1} + alpha_tilde * h`` interpolated from the stencil {i-1, i, i+1}.

    ``alpha_tilde`` lies in [1/2, 3/2) for interior cells; the shifted
    boundary stencils reach [0, 1/2) on the left and [3/2, 2] on the right.
    """

    base_index: int
    alpha_tilde: float
    epsilon: float = 1e-6

    def __post_init__(self):
        if not 0.0 <= self.alpha_tilde <= 2.0:
            raise ConfigurationError(f"alpha_tilde must lie in [0, 2], got {self.alpha_tilde}")
        if self.epsilon <= 0.0:
            raise ConfigurationError(f"epsilon must be positive, got {self.epsilon}")
        if self.base_index < 1:
            raise ConfigurationError(f"stencil center must be at least 1, got {self.base_index}")


def stencil_centers(cells: int, ratio: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Stencil centers and offsets for every point of a grid refined ``ratio`` times.

    Args:
        cells: Coarse cell count along the axis (at least 2)
        ratio: Refinement factor

    Returns:
        (center index i per fine point, alpha_tilde per fine point)
    """
    if cells < 2:
        raise ConfigurationError(f"three-point interpolation needs at least 2 cells, got {cells}")
    if ratio < 1:
        raise ConfigurationError(f"refinement ratio must be positive, got {ratio}")
    fine = np.arange(cells * ratio + 1)
    # i with the target in [x_{i-1/2}, x_{i+1/2}), shifted inward in the end cells
    centers = np.clip((2 * fine + ratio) // (2 * ratio), 1, cells - 1)
    alpha = fine / ratio - (centers - 1)
    return centers, alpha


def locate(fine_index: int, cells: int, ratio: int, epsilon: float = 1e-6) -> InterpPoint:
    """InterpPoint of one fine-grid point inside a coarse line of ``cells`` cells."""
    centers, alpha = stencil_centers(cells, ratio)
    return InterpPoint(int(centers[fine_index]), float(alpha[fine_index]), epsilon)


def lagrange3(left, mid, right, alpha):
    """Quadratic through (0, left), (1, mid), (2, right) at ``alpha``, vectorized."""
    return (
        0.5 * (alpha - 1.0) * (alpha - 2.0) * left
        - alpha * (alpha - 2.0) * mid
        + 0.5 * alpha * (alpha - 1.0) * right
    )


def weno3_weights_array(left, mid, right, alpha, epsilon: float = 1e-6):
    """Normalized weights (w1, w2) of the two linear candidates, vectorized."""
    beta1 = (mid - left) ** 2
    beta2 = (right - mid) ** 2
    w1 = (1.0 - 0.5 * alpha) / (epsilon + beta1) ** 2
    w2 = (0.5 * alpha) / (epsilon + beta2) ** 2
    total = w1 + w2
    return w1 / total, w2 / total


def weno3(left, mid, right, alpha, epsilon: float = 1e-6):
    """Nonlinear blend of the left and right linear interpolants, vectorized."""
    w1, w2 = weno3_weights_array(left, mid, right, alpha, epsilon)
    p1 = alpha * mid - (alpha - 1.0) * left
    p2 = (alpha - 1.0) * right - (alpha - 2.0) * mid
    return w1 * p1 + w2 * p2


def _stencil(v: Sequence[float]) -> Tuple[float, float, float]:
    if len(v) != 3:
        raise ConfigurationError(f"interpolation stencils hold 3 values, got {len(v)}")
    return float(v[0]), float(v[1]), float(v[2])


def weno3_interp_1d(v: Sequence[float], p: InterpPoint) -> float:
    """WENO interpolation of (phi_{i-1}, phi_i, phi_{i+1}) at ``p``."""
    left, mid, right = _stencil(v)
    return float(weno3(left, mid, right, p.alpha_tilde, p.epsilon))


def weno3_interp_weights(v: Sequence[float], p: InterpPoint) -> Tuple[float, float]:
    left, mid, right = _stencil(v)
    w1, w2 = weno3_weights_array(left, mid, right, p.alpha_tilde, p.epsilon)
    return float(w1), float(w2)


def lagrange3_interp_1d(v: Sequence[float], alpha_tilde: float) -> float:
    """Quadratic Lagrange interpolation of (phi_{i-1}, phi_i, phi_{i+1}) at ``alpha_tilde``."""
    left, mid, right = _stencil(v)
    return float(lagrange3(left, mid, right, float(alpha_tilde)))
