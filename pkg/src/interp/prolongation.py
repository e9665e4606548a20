"""Dimension-by-dimension prolongation of component solutions to the finest grid."""

import logging
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from ..exceptions import ConfigurationError
from ..grid import CartesianGrid
from ..sweeper import ScalarField
from .interpolation import lagrange3, stencil_centers, weno3

logger = logging.getLogger(__name__)


class ProlongationMethod(str, Enum):
    LAGRANGE = "lagrange"
    WENO = "weno"


def refine_axis(
    values: np.ndarray,
    axis: int,
    ratio: int,
    method: ProlongationMethod,
    epsilon: float = 1e-6,
) -> np.ndarray:
    """Interpolate every grid line along ``axis`` onto ``ratio`` times as many cells."""
    if ratio == 1:
        return values.copy()
    lines = np.moveaxis(values, axis, 0)
    cells = lines.shape[0] - 1
    centers, alpha = stencil_centers(cells, ratio)
    alpha = alpha.reshape((-1,) + (1,) * (lines.ndim - 1))
    left, mid, right = lines[centers - 1], lines[centers], lines[centers + 1]
    if method == ProlongationMethod.LAGRANGE:
        refined = lagrange3(left, mid, right, alpha)
    else:
        refined = weno3(left, mid, right, alpha, epsilon)
    # Points shared with the coarse line are copied, not interpolated.
    refined[::ratio] = lines
    return np.ascontiguousarray(np.moveaxis(refined, 0, axis))


def prolongate(
    field: ScalarField,
    target: CartesianGrid,
    method: ProlongationMethod = ProlongationMethod.LAGRANGE,
    epsilon: float = 1e-6,
    axes: Optional[Sequence[int]] = None,
) -> ScalarField:
    """
    Map a field from a nested (semi-coarsened) grid onto ``target``.

    Args:
        field: Solution on a member of the grid family
        target: The finest grid of the family
        method: Lagrange or WENO interpolation
        epsilon: WENO weight regularization
        axes: Refinement order; x then y then z by default

    Returns:
        Field on ``target`` with no fixed points

    Raises:
        GridMismatchError: if the field's grid is not nested in ``target``
    """
    method = ProlongationMethod(method)
    ratios = field.grid.refinement_ratios(target)
    order = tuple(range(target.dim)) if axes is None else tuple(axes)
    if sorted(order) != list(range(target.dim)):
        raise ConfigurationError(f"axes {order} is not a permutation of the grid axes")

    values = field.values
    for axis in order:
        values = refine_axis(values, axis, ratios[axis], method, epsilon)
    logger.debug(
        "Prolongated %s -> %s (%s)", field.grid.describe(), target.describe(), method.value
    )
    return ScalarField(target, values, np.zeros(target.shape, dtype=bool))
