"""Semi-coarsened grid families and their combination coefficients."""

import itertools
import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple, Union

from ..exceptions import ConfigurationError
from .cartesian_grid import MIN_CELLS, CartesianGrid, Domain, build_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlanEntry:
    """One component grid of a sparse plan."""

    levels: Tuple[int, ...]
    coefficient: int

    @property
    def level_sum(self) -> int:
        return sum(self.levels)


@dataclass(frozen=True)
class SparsePlan:
    """Index set of a combination-technique solve.

    The component grid for an entry refines the root grid ``2**l_i`` times on
    axis ``i``; the target grid refines every axis ``2**finest_level`` times.
    """

    domain: Domain
    root_cells: Tuple[int, ...]
    finest_level: int
    entries: Tuple[PlanEntry, ...]

    @property
    def dim(self) -> int:
        return len(self.root_cells)

    @property
    def coefficient_sum(self) -> int:
        return sum(entry.coefficient for entry in self.entries)

    def grid_for(self, levels: Sequence[int]) -> CartesianGrid:
        cells = tuple(n * 2 ** l for n, l in zip(self.root_cells, levels))
        return build_grid(self.domain.origin, self.domain.extent, cells, levels=tuple(levels))

    def grids(self) -> List[CartesianGrid]:
        """Instantiate the component grids in plan order."""
        return [self.grid_for(entry.levels) for entry in self.entries]

    def finest_grid(self) -> CartesianGrid:
        return self.grid_for((self.finest_level,) * self.dim)

    def component_points(self) -> int:
        """Total number of grid points over all component grids."""
        return sum(grid.size for grid in self.grids())


def combination_coefficient(dim: int, shell: int) -> int:
    """Coefficient of the grids whose level sum is ``finest_level - shell``.

    Gives +1, -1 in 2D and +1, -2, +1 in 3D.
    """
    return (-1) ** shell * comb(dim - 1, shell)


def _level_tuples(dim: int, total: int) -> List[Tuple[int, ...]]:
    return sorted(
        levels
        for levels in itertools.product(range(total + 1), repeat=dim)
        if sum(levels) == total
    )


def semi_coarsened_family(
    domain: Domain,
    root_cells: Union[int, Sequence[int]],
    finest_level: int,
    dim: Optional[int] = None,
) -> SparsePlan:
    """
    Build the combination index set of semi-coarsened grids.

    Args:
        domain: Computational box
        root_cells: N_r, either one count for every axis or one per axis
        finest_level: N_L, the refinement level of the target grid
        dim: Number of axes; defaults to the domain's

    Returns:
        SparsePlan whose entries have level sums N_L, N_L - 1 (and N_L - 2 in 3D)
    """
    dim = domain.dim if dim is None else dim
    if dim not in (2, 3):
        raise ConfigurationError(f"sparse grids are built in 2 or 3 dimensions, got {dim}")
    if domain.dim != dim:
        raise ConfigurationError(f"domain has {domain.dim} axes but dim={dim}")
    if isinstance(root_cells, int):
        root_cells = (root_cells,) * dim
    root_cells = tuple(int(n) for n in root_cells)
    if len(root_cells) != dim:
        raise ConfigurationError(f"expected {dim} root cell counts, got {len(root_cells)}")
    if any(n < MIN_CELLS for n in root_cells):
        raise ConfigurationError(f"root grid needs at least {MIN_CELLS} cells per axis, got {root_cells}")
    if finest_level < 1:
        raise ConfigurationError(f"finest level must be at least 1, got {finest_level}")
    if dim == 3 and finest_level < 2:
        logger.warning("3D plan with N_L=%d drops the N_L - 2 shell", finest_level)

    entries = []
    for shell in range(dim):
        total = finest_level - shell
        if total < 0:
            continue
        coefficient = combination_coefficient(dim, shell)
        entries.extend(PlanEntry(levels, coefficient) for levels in _level_tuples(dim, total))

    plan = SparsePlan(domain, root_cells, finest_level, tuple(entries))
    logger.debug(
        "sparse plan: dim=%d N_r=%s N_L=%d, %d component grids",
        dim, root_cells, finest_level, len(entries),
    )
    return plan
