"""Hamiltonians of the form H(x, p) = F|p| + b.p."""

from dataclasses import dataclass, field
from typing import Sequence, Tuple

import numpy as np

from ..exceptions import ConfigurationError


@dataclass(frozen=True)
class HamiltonianSpec:
    """Convex Hamiltonian ``speed * |p| + drift . p``.

    Covers the Eikonal equation (speed 1, no drift), the boat-sail problem
    (boat speed F, river velocity as drift) and linear advection (speed 0).
    ``alpha`` bounds ``|dH/dp_i|`` and defaults to ``speed + |drift_i|``.
    """

    speed: float
    drift: Tuple[float, ...]
    alpha: Tuple[float, ...] = field(default=())
    name: str = "hamiltonian"

    def __post_init__(self):
        object.__setattr__(self, "speed", float(self.speed))
        object.__setattr__(self, "drift", tuple(float(b) for b in self.drift))
        if self.speed < 0.0:
            raise ConfigurationError(f"speed must be nonnegative, got {self.speed}")
        if not self.alpha:
            object.__setattr__(self, "alpha", tuple(self.speed + abs(b) for b in self.drift))
        else:
            object.__setattr__(self, "alpha", tuple(float(a) for a in self.alpha))
        if len(self.alpha) != len(self.drift):
            raise ConfigurationError("alpha and drift need one entry per axis")
        if any(a <= 0.0 for a in self.alpha):
            raise ConfigurationError(f"alpha must be positive on every axis, got {self.alpha}")

    @property
    def dim(self) -> int:
        return len(self.drift)

    def evaluate(self, x: Sequence[float], p: Sequence[float]) -> float:
        """H(x, p); the family is independent of ``x``."""
        p = np.asarray(p, dtype=float)
        return float(self.speed * np.sqrt(np.dot(p, p)) + np.dot(self.drift, p))


def eikonal(dim: int) -> HamiltonianSpec:
    return HamiltonianSpec(1.0, (0.0,) * dim, name="eikonal")


def boat_sail(boat_speed: float, river: Sequence[float]) -> HamiltonianSpec:
    """Hamiltonian of the minimum-travel-time problem on a moving river."""
    river = tuple(float(v) for v in river)
    if boat_speed <= float(np.linalg.norm(river)):
        raise ConfigurationError(
            f"boat speed {boat_speed} must exceed the river speed {np.linalg.norm(river):.4g}"
        )
    return HamiltonianSpec(boat_speed, river, name="boat-sail")


def linear_advection(velocity: Sequence[float]) -> HamiltonianSpec:
    return HamiltonianSpec(0.0, tuple(velocity), name="linear-advection")


def eval_hamiltonian(spec: HamiltonianSpec, x: Sequence[float], p: Sequence[float]) -> float:
    """Evaluate H(x, p) for a gradient with one component per axis."""
    if len(p) != spec.dim:
        raise ConfigurationError(f"gradient has {len(p)} components, expected {spec.dim}")
    return spec.evaluate(x, p)
