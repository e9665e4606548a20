"""Uniform vertex-centered Cartesian grids."""

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from ..exceptions import ConfigurationError, GridMismatchError

logger = logging.getLogger(__name__)

# Third-order stencils reach two points on each side of the evaluation point.
MIN_CELLS = 4


@dataclass(frozen=True)
class Domain:
    """Axis-aligned box given by its lower corner and edge lengths."""

    origin: Tuple[float, ...]
    extent: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "origin", tuple(float(a) for a in self.origin))
        object.__setattr__(self, "extent", tuple(float(e) for e in self.extent))
        if len(self.origin) != len(self.extent):
            raise ConfigurationError(
                f"origin has {len(self.origin)} axes but extent has {len(self.extent)}"
            )
        if any(e <= 0.0 for e in self.extent):
            raise ConfigurationError(f"extent must be positive on every axis, got {self.extent}")

    @property
    def dim(self) -> int:
        return len(self.origin)

    @property
    def upper(self) -> Tuple[float, ...]:
        return tuple(a + e for a, e in zip(self.origin, self.extent))

    @property
    def volume(self) -> float:
        return float(np.prod(self.extent))

    def contains(self, position: Sequence[float], tol: float = 1e-12) -> bool:
        """Check whether a position lies inside the closed box."""
        return all(
            a - tol <= x <= b + tol
            for x, a, b in zip(position, self.origin, self.upper)
        )


@dataclass(frozen=True)
class CartesianGrid:
    """Uniform grid with points at cell corners.

    Axis ``i`` has ``cells[i] + 1`` points at ``origin[i] + k * spacing[i]``.
    ``levels`` records the refinement level of each axis relative to the root
    grid of a semi-coarsened family (all zeros for a stand-alone grid).
    """

    origin: Tuple[float, ...]
    extent: Tuple[float, ...]
    cells: Tuple[int, ...]
    levels: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "origin", tuple(float(a) for a in self.origin))
        object.__setattr__(self, "extent", tuple(float(e) for e in self.extent))
        object.__setattr__(self, "cells", tuple(int(n) for n in self.cells))
        if not self.levels:
            object.__setattr__(self, "levels", (0,) * len(self.cells))
        else:
            object.__setattr__(self, "levels", tuple(int(l) for l in self.levels))
        if not (len(self.origin) == len(self.extent) == len(self.cells) == len(self.levels)):
            raise ConfigurationError("origin, extent, cells and levels must have one entry per axis")
        if any(l < 0 for l in self.levels):
            raise ConfigurationError(f"refinement levels must be nonnegative, got {self.levels}")

    @property
    def dim(self) -> int:
        return len(self.cells)

    @property
    def domain(self) -> Domain:
        return Domain(self.origin, self.extent)

    @property
    def spacing(self) -> Tuple[float, ...]:
        return tuple(e / n for e, n in zip(self.extent, self.cells))

    @property
    def points(self) -> Tuple[int, ...]:
        """Number of grid points per axis."""
        return tuple(n + 1 for n in self.cells)

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.points

    @property
    def size(self) -> int:
        return int(np.prod(self.points))

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    def coordinate(self, axis: int, index: int) -> float:
        """Coordinate of point ``index`` on ``axis``; exact at both endpoints."""
        if index == self.cells[axis]:
            return self.origin[axis] + self.extent[axis]
        return self.origin[axis] + index * self.spacing[axis]

    def coordinates(self, axis: int) -> np.ndarray:
        coords = self.origin[axis] + np.arange(self.points[axis]) * self.spacing[axis]
        coords[-1] = self.origin[axis] + self.extent[axis]
        return coords

    def mesh(self) -> Tuple[np.ndarray, ...]:
        """Coordinate arrays of all grid points, one per axis (``ij`` indexing)."""
        return tuple(
            np.meshgrid(*(self.coordinates(axis) for axis in range(self.dim)), indexing="ij")
        )

    def same_points(self, other: "CartesianGrid", rtol: float = 1e-12) -> bool:
        """Check whether two grids describe the same point set."""
        return (
            self.cells == other.cells
            and np.allclose(self.origin, other.origin, rtol=rtol, atol=rtol)
            and np.allclose(self.extent, other.extent, rtol=rtol, atol=rtol)
        )

    def refinement_ratios(self, finer: "CartesianGrid") -> Tuple[int, ...]:
        """Per-axis point-count ratio to a finer grid of the same domain.

        Raises:
            GridMismatchError: if ``finer`` does not cover the same box or its
                cell counts are not power-of-two multiples of ours.
        """
        if finer.dim != self.dim:
            raise GridMismatchError(f"grid dimensions differ: {self.dim} vs {finer.dim}")
        if not (
            np.allclose(self.origin, finer.origin, rtol=1e-12, atol=1e-12)
            and np.allclose(self.extent, finer.extent, rtol=1e-12, atol=1e-12)
        ):
            raise GridMismatchError("grids do not cover the same domain")
        ratios = []
        for coarse, fine in zip(self.cells, finer.cells):
            ratio, remainder = divmod(fine, coarse)
            if remainder or ratio < 1 or ratio & (ratio - 1):
                raise GridMismatchError(
                    f"{coarse} cells are not nested in {fine} cells by a power of two"
                )
            ratios.append(ratio)
        return tuple(ratios)

    def describe(self) -> str:
        cells = "x".join(str(n) for n in self.cells)
        if any(self.levels):
            return f"{cells} (levels {self.levels})"
        return cells


def build_grid(
    origin: Sequence[float],
    extent: Sequence[float],
    cells: Sequence[int],
    levels: Optional[Sequence[int]] = None,
    min_cells: int = MIN_CELLS,
) -> CartesianGrid:
    """
    Build a uniform grid over ``[origin, origin + extent]``.

    Args:
        origin: Lower corner per axis
        extent: Edge length per axis (positive)
        cells: Cell count per axis
        levels: Optional refinement levels relative to a root grid
        min_cells: Smallest admissible cell count per axis

    Returns:
        The validated CartesianGrid
    """
    if not (1 <= len(cells) <= 3):
        raise ConfigurationError(f"grids must have 1 to 3 axes, got {len(cells)}")
    if any(e <= 0.0 for e in extent):
        raise ConfigurationError(f"extent must be positive on every axis, got {tuple(extent)}")
    if any(int(n) < min_cells for n in cells):
        raise ConfigurationError(
            f"every axis needs at least {min_cells} cells for third-order stencils, got {tuple(cells)}"
        )
    return CartesianGrid(tuple(origin), tuple(extent), tuple(cells), tuple(levels or ()))
