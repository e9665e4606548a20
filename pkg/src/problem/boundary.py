"""Boundary sets where the solution is prescribed, and their grid bands."""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import ConfigurationError
from ..grid import CartesianGrid, Domain

# Slack for points that sit exactly on a band edge.
_BAND_TOL = 1e-9


class BoundaryKind(str, Enum):
    POINT_SET = "point-set"
    INFLOW_LINE = "inflow-line"
    SURFACE_SET = "surface-set"


def _axis_view(values: np.ndarray, axis: int, dim: int) -> np.ndarray:
    shape = [1] * dim
    shape[axis] = values.size
    return values.reshape(shape)


def _unit(grid: CartesianGrid, spacing: Optional[Sequence[float]], axis: int) -> float:
    return float(spacing[axis]) if spacing is not None else grid.spacing[axis]


@dataclass(frozen=True)
class PointMember:
    """An isolated source point."""

    position: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "position", tuple(float(x) for x in self.position))

    def band_mask(
        self, grid: CartesianGrid, radius: float, spacing: Optional[Sequence[float]] = None
    ) -> np.ndarray:
        mask = np.ones(grid.shape, dtype=bool)
        for axis in range(grid.dim):
            offset = np.abs(grid.coordinates(axis) - self.position[axis]) / _unit(grid, spacing, axis)
            mask &= _axis_view(offset <= radius + _BAND_TOL, axis, grid.dim)
        return mask

    def inside(self, domain: Domain) -> bool:
        return domain.contains(self.position)

    def sample(self, domain: Domain, count: int, rng: np.random.Generator) -> np.ndarray:
        return np.array([self.position])


@dataclass(frozen=True)
class PlaneMember:
    """The hyperplane ``x[axis] == coordinate`` intersected with the domain."""

    axis: int
    coordinate: float

    def band_mask(
        self, grid: CartesianGrid, radius: float, spacing: Optional[Sequence[float]] = None
    ) -> np.ndarray:
        offset = np.abs(grid.coordinates(self.axis) - self.coordinate) / _unit(grid, spacing, self.axis)
        band = _axis_view(offset <= radius + _BAND_TOL, self.axis, grid.dim)
        return np.broadcast_to(band, grid.shape).copy()

    def inside(self, domain: Domain) -> bool:
        lower, upper = domain.origin[self.axis], domain.upper[self.axis]
        return lower - 1e-12 <= self.coordinate <= upper + 1e-12

    def sample(self, domain: Domain, count: int, rng: np.random.Generator) -> np.ndarray:
        points = rng.uniform(domain.origin, domain.upper, size=(count, domain.dim))
        points[:, self.axis] = self.coordinate
        return points


@dataclass(frozen=True)
class SphereMember:
    """A sphere (circle in 2D) given by center and radius."""

    center: Tuple[float, ...]
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(float(x) for x in self.center))

    def band_mask(
        self, grid: CartesianGrid, radius: float, spacing: Optional[Sequence[float]] = None
    ) -> np.ndarray:
        # A point is in the band when its box of half-widths radius*h meets the sphere.
        near_sq = np.zeros(grid.shape)
        far_sq = np.zeros(grid.shape)
        for axis in range(grid.dim):
            coords = grid.coordinates(axis)
            reach = (radius + _BAND_TOL) * _unit(grid, spacing, axis)
            lo = coords - reach - self.center[axis]
            hi = coords + reach - self.center[axis]
            near = np.maximum(np.maximum(lo, -hi), 0.0)
            far = np.maximum(np.abs(lo), np.abs(hi))
            near_sq = near_sq + _axis_view(near ** 2, axis, grid.dim)
            far_sq = far_sq + _axis_view(far ** 2, axis, grid.dim)
        return (near_sq <= self.radius ** 2) & (far_sq >= self.radius ** 2)

    def inside(self, domain: Domain) -> bool:
        lower = tuple(c - self.radius for c in self.center)
        upper = tuple(c + self.radius for c in self.center)
        return domain.contains(lower) and domain.contains(upper)

    def sample(self, domain: Domain, count: int, rng: np.random.Generator) -> np.ndarray:
        directions = rng.normal(size=(count, len(self.center)))
        directions /= np.linalg.norm(directions, axis=1, keepdims=True)
        return np.asarray(self.center) + self.radius * directions


BoundaryMember = Union[PointMember, PlaneMember, SphereMember]


@dataclass(frozen=True)
class BoundaryData:
    """The set Gamma with its prescribed values ``g``.

    ``value`` is vectorized over coordinate arrays: ``value(x, y[, z])``.
    """

    kind: BoundaryKind
    members: Tuple[BoundaryMember, ...]
    value: Callable[..., np.ndarray]

    def point_members(self) -> List[PointMember]:
        return [m for m in self.members if isinstance(m, PointMember)]

    def extended_members(self) -> List[BoundaryMember]:
        return [m for m in self.members if not isinstance(m, PointMember)]

    def band_mask(
        self, grid: CartesianGrid, radius: float, spacing: Optional[Sequence[float]] = None
    ) -> np.ndarray:
        """Grid points within ``radius`` cells (per axis) of some member.

        Cells are measured with ``spacing`` when given, otherwise with the grid's own.
        """
        mask = np.zeros(grid.shape, dtype=bool)
        for member in self.members:
            mask |= member.band_mask(grid, radius, spacing)
        return mask

    def value_at(self, position: Sequence[float]) -> float:
        return float(self.value(*position))

    def sample_points(self, domain: Domain, count: int = 16, seed: int = 0) -> np.ndarray:
        """Positions on Gamma, ``count`` per extended member plus every source point."""
        rng = np.random.default_rng(seed)
        return np.concatenate([m.sample(domain, count, rng) for m in self.members], axis=0)

    def validate(self, domain: Domain) -> None:
        """Check that every member lies in the domain and ``g`` is finite on it."""
        if not self.members:
            raise ConfigurationError("boundary set is empty")
        for member in self.members:
            if not member.inside(domain):
                raise ConfigurationError(f"boundary member {member} lies outside the domain")
        samples = self.sample_points(domain, count=4)
        values = np.asarray(self.value(*samples.T), dtype=float)
        if not np.all(np.isfinite(values)):
            raise ConfigurationError("boundary data g is not finite on Gamma")
