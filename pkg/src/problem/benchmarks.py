"""Problem definitions: the six benchmark problems and custom point-source problems."""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Union

import numpy as np

from ..exceptions import ConfigurationError, MissingExactSolutionError
from ..grid import CartesianGrid, Domain
from .boundary import BoundaryData, BoundaryKind, PlaneMember, PointMember, SphereMember
from .hamiltonian import HamiltonianSpec, boat_sail, eikonal, linear_advection

logger = logging.getLogger(__name__)

PI = np.pi


@dataclass(frozen=True)
class ProblemSpec:
    """A static Hamilton-Jacobi problem H(x, grad phi) = f on a box.

    ``rhs`` and ``exact`` are vectorized over coordinate arrays and may
    return scalars for constant functions. ``gamma`` is the iteration
    parameter tuned for the problem.
    """

    name: str
    domain: Domain
    hamiltonian: HamiltonianSpec
    rhs: Callable[..., np.ndarray]
    boundary: BoundaryData
    gamma: float
    exact: Optional[Callable[..., np.ndarray]] = None
    description: str = ""

    def __post_init__(self):
        if not 0.0 < self.gamma <= 1.0:
            raise ConfigurationError(f"gamma must lie in (0, 1], got {self.gamma}")
        if self.hamiltonian.dim != self.domain.dim:
            raise ConfigurationError(
                f"Hamiltonian has {self.hamiltonian.dim} axes, domain has {self.domain.dim}"
            )
        self.boundary.validate(self.domain)

    @property
    def dim(self) -> int:
        return self.domain.dim

    @property
    def has_exact(self) -> bool:
        return self.exact is not None

    def rhs_on(self, grid: CartesianGrid) -> np.ndarray:
        values = np.asarray(self.rhs(*grid.mesh()), dtype=float)
        return np.array(np.broadcast_to(values, grid.shape), dtype=float)

    def exact_on(self, grid: CartesianGrid) -> np.ndarray:
        if self.exact is None:
            raise MissingExactSolutionError(f"problem '{self.name}' has no exact solution")
        values = np.asarray(self.exact(*grid.mesh()), dtype=float)
        return np.array(np.broadcast_to(values, grid.shape), dtype=float)


def exact_solution(spec: ProblemSpec, x: Sequence[float]) -> float:
    """Exact viscosity solution at one position."""
    if spec.exact is None:
        raise MissingExactSolutionError(f"problem '{spec.name}' has no exact solution")
    return float(spec.exact(*x))


def _distance_to_points(points: Sequence[Sequence[float]]) -> Callable[..., np.ndarray]:
    centers = np.asarray(points, dtype=float)

    def distance(*coords):
        result = None
        for center in centers:
            d = np.sqrt(sum((np.asarray(c) - x0) ** 2 for c, x0 in zip(coords, center)))
            result = d if result is None else np.minimum(result, d)
        return result

    return distance


def _zero(*coords):
    return np.zeros(np.broadcast(*coords).shape)


def _one(*coords):
    return np.ones(np.broadcast(*coords).shape)


# Example 1: linear advection phi_x + phi_y = 0 with inflow data on x=0 and y=0.

def _advection_inflow(x, y):
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    return np.where(np.isclose(x, 0.0), -np.sin(y), np.sin(x))


def _advection_exact(x, y):
    return np.sin(np.asarray(x) - np.asarray(y))


def _linear_advection_problem() -> ProblemSpec:
    boundary = BoundaryData(
        BoundaryKind.INFLOW_LINE,
        (PlaneMember(0, 0.0), PlaneMember(1, 0.0)),
        _advection_inflow,
    )
    return ProblemSpec(
        name="example-1",
        domain=Domain((0.0, 0.0), (2 * PI, 2 * PI)),
        hamiltonian=linear_advection((1.0, 1.0)),
        rhs=_zero,
        boundary=boundary,
        gamma=1.0,
        exact=_advection_exact,
        description="linear problem phi_x + phi_y = 0 with smooth solution sin(x - y)",
    )


# Example 2: Eikonal equation with a smooth solution and a single source.

def _smooth_source_rhs(x, y):
    sx = np.sin(PI + 0.5 * PI * np.asarray(x))
    sy = np.sin(PI + 0.5 * PI * np.asarray(y))
    return 0.5 * PI * np.sqrt(sx ** 2 + sy ** 2)


def _smooth_source_exact(x, y):
    return np.cos(PI + 0.5 * PI * np.asarray(x)) + np.cos(PI + 0.5 * PI * np.asarray(y))


def _smooth_source_problem() -> ProblemSpec:
    boundary = BoundaryData(
        BoundaryKind.POINT_SET,
        (PointMember((0.0, 0.0)),),
        lambda x, y: np.full(np.broadcast(x, y).shape, -2.0),
    )
    return ProblemSpec(
        name="example-2",
        domain=Domain((-1.0, -1.0), (2.0, 2.0)),
        hamiltonian=eikonal(2),
        rhs=_smooth_source_rhs,
        boundary=boundary,
        gamma=0.4,
        exact=_smooth_source_exact,
        description="Eikonal equation with smooth solution and a source at the origin",
    )


# Example 3: distance to two spheres in 3D.

SPHERE_CENTERS = ((-1.0, 0.0, 0.0), (float(np.sqrt(1.5)), 0.0, 0.0))
SPHERE_RADIUS = 0.5


def _two_sphere_exact(x, y, z):
    x, y, z = np.asarray(x), np.asarray(y), np.asarray(z)
    distances = [
        np.abs(np.sqrt((x - c[0]) ** 2 + (y - c[1]) ** 2 + (z - c[2]) ** 2) - SPHERE_RADIUS)
        for c in SPHERE_CENTERS
    ]
    return np.minimum(*distances)


def _two_sphere_problem() -> ProblemSpec:
    boundary = BoundaryData(
        BoundaryKind.SURFACE_SET,
        tuple(SphereMember(center, SPHERE_RADIUS) for center in SPHERE_CENTERS),
        _zero,
    )
    return ProblemSpec(
        name="example-3",
        domain=Domain((-3.0, -3.0, -3.0), (6.0, 6.0, 6.0)),
        hamiltonian=eikonal(3),
        rhs=_one,
        boundary=boundary,
        gamma=0.8,
        exact=_two_sphere_exact,
        description="distance to two spheres of radius 0.5",
    )


# Example 4: shape-from-shading with five pinned interior points.

SHADING_POINTS = ((0.25, 0.25), (0.75, 0.75), (0.25, 0.75), (0.75, 0.25), (0.5, 0.5))


def _shading_rhs(x, y):
    x, y = np.asarray(x), np.asarray(y)
    a = np.cos(2 * PI * x) * np.sin(2 * PI * y)
    b = np.sin(2 * PI * x) * np.cos(2 * PI * y)
    return 2 * PI * np.sqrt(a ** 2 + b ** 2)


def _shading_value(x, y):
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    center = np.isclose(x, 0.5) & np.isclose(y, 0.5)
    corner = np.isclose(np.abs(x - 0.5), 0.25) & np.isclose(np.abs(y - 0.5), 0.25)
    return np.where(center, 2.0, np.where(corner, 1.0, 0.0))


def _shading_exact(x, y):
    x, y = np.asarray(x), np.asarray(y)
    ridge = np.abs(np.sin(2 * PI * x) * np.sin(2 * PI * y))
    peak = np.maximum(ridge, 1.0 + np.cos(2 * PI * x) * np.cos(2 * PI * y))
    inner = (np.abs(x + y - 1.0) < 0.5) & (np.abs(x - y) < 0.5)
    return np.where(inner, peak, ridge)


def shading_brightness(x, y):
    """Image brightness 1/sqrt(1 + f^2) under vertical lighting."""
    return 1.0 / np.sqrt(1.0 + _shading_rhs(x, y) ** 2)


def _shape_from_shading_problem() -> ProblemSpec:
    faces = tuple(PlaneMember(axis, c) for axis in (0, 1) for c in (0.0, 1.0))
    boundary = BoundaryData(
        BoundaryKind.SURFACE_SET,
        faces + tuple(PointMember(p) for p in SHADING_POINTS),
        _shading_value,
    )
    return ProblemSpec(
        name="example-4",
        domain=Domain((0.0, 0.0), (1.0, 1.0)),
        hamiltonian=eikonal(2),
        rhs=_shading_rhs,
        boundary=boundary,
        gamma=0.4,
        exact=_shading_exact,
        description="shape-from-shading with non-smooth solution",
    )


# Examples 5 and 6: Voronoi generators and boat-sail harbors.

VORONOI_2D = (
    (1 / 4, 1 / 5), (1 / 3, 1 / 7), (3 / 5, 1 / 5), (3 / 4, 1 / 2),
    (1 / 2, 3 / 4), (1 / 4, 1 / 2), (1 / 7, 4 / 5), (1 / 2, 1 / 2),
)
VORONOI_3D = (
    (1 / 4, 1 / 5, 1 / 8), (1 / 3, 1 / 7, 7 / 9), (3 / 5, 1 / 5, 4 / 5), (3 / 4, 1 / 2, 1 / 4),
    (1 / 2, 3 / 4, 4 / 5), (1 / 4, 1 / 2, 1 / 2), (1 / 7, 4 / 5, 3 / 5), (1 / 2, 1 / 2, 1 / 4),
)
HARBORS_2D = (
    (1 / 4, 1 / 5), (5 / 16, 1 / 8), (3 / 5, 1 / 5), (3 / 4, 3 / 5),
    (1 / 2, 3 / 4), (1 / 4, 1 / 2), (1 / 8, 4 / 5), (1 / 2, 1 / 2),
)
HARBORS_3D = VORONOI_3D
RIVER_2D = (0.4, 0.0)
RIVER_3D = (0.4, 0.4, 0.0)


def _unit_box(dim: int) -> Domain:
    return Domain((0.0,) * dim, (1.0,) * dim)


def _voronoi_problem(dim: int) -> ProblemSpec:
    generators = VORONOI_2D if dim == 2 else VORONOI_3D
    boundary = BoundaryData(
        BoundaryKind.POINT_SET, tuple(PointMember(p) for p in generators), _zero
    )
    return ProblemSpec(
        name=f"example-5-{dim}d",
        domain=_unit_box(dim),
        hamiltonian=eikonal(dim),
        rhs=_one,
        boundary=boundary,
        gamma=0.8,
        exact=_distance_to_points(generators),
        description=f"{dim}D Voronoi diagram: distance to 8 generators",
    )


def _boat_sail_problem(dim: int) -> ProblemSpec:
    harbors = HARBORS_2D if dim == 2 else HARBORS_3D
    river = RIVER_2D if dim == 2 else RIVER_3D
    boundary = BoundaryData(
        BoundaryKind.POINT_SET, tuple(PointMember(p) for p in harbors), _zero
    )
    return ProblemSpec(
        name=f"example-6-{dim}d",
        domain=_unit_box(dim),
        hamiltonian=boat_sail(1.0, river),
        rhs=_one,
        boundary=boundary,
        gamma=0.8,
        exact=None,
        description=f"{dim}D boat-sail travel time to 8 harbors on a river",
    )


_CASED = {5: _voronoi_problem, 6: _boat_sail_problem}
_UNCASED = {
    1: _linear_advection_problem,
    2: _smooth_source_problem,
    3: _two_sphere_problem,
    4: _shape_from_shading_problem,
}

BENCHMARK_IDS = (1, 2, 3, 4, 5, 6)


def parse_case(case: Union[str, int, None]) -> Optional[int]:
    """Map '2D'/'3d'/2 style case labels to a dimension."""
    if case is None:
        return None
    label = str(case).strip().lower().rstrip("d")
    if label not in ("2", "3"):
        raise ConfigurationError(f"case must be 2D or 3D, got {case!r}")
    return int(label)


def make_benchmark(example_id: int, case: Union[str, int, None] = None) -> ProblemSpec:
    """
    Build one of the six benchmark problems.

    Args:
        example_id: Benchmark number 1-6
        case: '2D' or '3D'; required for examples 5 and 6

    Returns:
        The configured ProblemSpec
    """
    dim = parse_case(case)
    if example_id in _UNCASED:
        return _UNCASED[example_id]()
    if example_id in _CASED:
        if dim is None:
            raise ConfigurationError(f"example {example_id} needs a case (2D or 3D)")
        return _CASED[example_id](dim)
    raise ConfigurationError(f"unknown benchmark id {example_id}; expected one of {BENCHMARK_IDS}")


def list_benchmarks() -> List[Dict[str, object]]:
    """Short descriptions of every benchmark and case."""
    listing = []
    for example_id in BENCHMARK_IDS:
        cases = (None,) if example_id in _UNCASED else ("2D", "3D")
        for case in cases:
            spec = make_benchmark(example_id, case)
            listing.append({
                "id": example_id,
                "case": case,
                "name": spec.name,
                "dim": spec.dim,
                "gamma": spec.gamma,
                "has_exact": spec.has_exact,
                "description": spec.description,
            })
    return listing


def make_custom_problem(
    origin: Sequence[float],
    extent: Sequence[float],
    sources: Sequence[Sequence[float]],
    speed: float = 1.0,
    drift: Optional[Sequence[float]] = None,
    rhs: float = 1.0,
    gamma: float = 0.8,
    name: str = "custom",
) -> ProblemSpec:
    """
    Point-source travel-time problem ``speed |grad phi| + drift . grad phi = rhs``.

    Sources carry the value 0. Without drift the exact solution is the
    distance to the nearest source scaled by ``rhs / speed``.
    """
    dim = len(origin)
    drift = tuple(drift) if drift is not None else (0.0,) * dim
    if rhs <= 0.0:
        raise ConfigurationError(f"right-hand side must be positive, got {rhs}")
    if any(drift):
        hamiltonian = boat_sail(speed, drift)
        exact = None
    else:
        hamiltonian = HamiltonianSpec(speed, drift, name="eikonal")
        distance = _distance_to_points(sources)
        scale = rhs / speed

        def exact(*coords):
            return scale * distance(*coords)

    boundary = BoundaryData(
        BoundaryKind.POINT_SET, tuple(PointMember(p) for p in sources), _zero
    )
    return ProblemSpec(
        name=name,
        domain=Domain(tuple(origin), tuple(extent)),
        hamiltonian=hamiltonian,
        rhs=lambda *coords: np.full(np.broadcast(*coords).shape, float(rhs)),
        boundary=boundary,
        gamma=gamma,
        exact=exact,
        description=f"custom {hamiltonian.name} problem with {len(sources)} sources",
    )
