"""Discrete error norms and observed convergence orders."""

from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import ConfigurationError, MissingExactSolutionError
from ..sweeper import ScalarField

ExactSolution = Union[Callable[..., np.ndarray], np.ndarray]


def error_norms(
    field: ScalarField,
    exact: Optional[ExactSolution],
    per_volume: bool = False,
) -> Tuple[float, float]:
    """
    L1 and L-infinity errors over the non-fixed points of ``field``.

    Args:
        field: Numerical solution
        exact: Vectorized exact solution ``exact(x, y[, z])`` or its values on the grid
        per_volume: Divide L1 by the domain volume (the mean error tabulated in studies)

    Returns:
        (L1, Linf) with L1 weighted by the cell volume
    """
    if exact is None:
        raise MissingExactSolutionError("no exact solution to measure errors against")
    if callable(exact):
        reference = np.broadcast_to(np.asarray(exact(*field.grid.mesh()), dtype=float), field.grid.shape)
    else:
        reference = np.asarray(exact, dtype=float)
        if reference.shape != field.grid.shape:
            raise ConfigurationError(
                f"exact values {reference.shape} do not match grid {field.grid.shape}"
            )
    free = ~field.fixed
    if not free.any():
        return 0.0, 0.0
    diff = np.abs(field.values[free] - reference[free])
    l1 = field.grid.cell_volume * diff.sum()
    if per_volume:
        l1 /= field.grid.domain.volume
    return float(l1), float(diff.max())


def convergence_orders(errors: Sequence[float]) -> List[float]:
    """log2 ratios of consecutive errors for successive grid-size halvings."""
    values = np.asarray(errors, dtype=float)
    if values.size < 2:
        raise ConfigurationError("orders need at least two errors")
    if np.any(values <= 0.0):
        raise ConfigurationError(f"errors must be positive, got {list(errors)}")
    return [float(o) for o in np.log2(values[:-1] / values[1:])]


def contour_levels(vmin: float, vmax: float, count: int = 30) -> np.ndarray:
    """Equally spaced contour values from ``vmin`` to ``vmax``."""
    if count < 2:
        raise ConfigurationError(f"need at least 2 contour levels, got {count}")
    if not vmax > vmin:
        raise ConfigurationError(f"empty contour range [{vmin}, {vmax}]")
    return np.linspace(vmin, vmax, count)
