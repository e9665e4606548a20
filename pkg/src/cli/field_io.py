"""Plain-text field dumps.

Layout: the number of axes on the first line, ``origin spacing points`` for
every axis on the second, then one value per line with the first axis
varying fastest.
"""

from pathlib import Path
from typing import Union

import numpy as np

from ..exceptions import ConfigurationError
from ..grid import build_grid
from ..sweeper import ScalarField

_VALUE_FORMAT = "%.17g"


def dump_field(field: ScalarField, path: Union[str, Path]) -> Path:
    """Write ``field`` to ``path``; values round-trip exactly."""
    grid = field.grid
    axes = " ".join(
        f"{grid.origin[a]!r} {grid.spacing[a]!r} {grid.points[a]}" for a in range(grid.dim)
    )
    path = Path(path)
    with open(path, "w") as handle:
        handle.write(f"{grid.dim}\n{axes}\n")
        np.savetxt(handle, field.values.ravel(order="F"), fmt=_VALUE_FORMAT)
    return path


def load_field(path: Union[str, Path]) -> ScalarField:
    """Read a dump written by ``dump_field``; no points are marked fixed."""
    with open(path) as handle:
        try:
            dim = int(handle.readline())
            header = [float(x) for x in handle.readline().split()]
        except ValueError as exc:
            raise ConfigurationError(f"{path} is not a field dump: {exc}") from exc
        if len(header) != 3 * dim:
            raise ConfigurationError(f"{path}: expected {3 * dim} header entries, got {len(header)}")
        values = np.loadtxt(handle, dtype=float, ndmin=1)
    origin = header[0::3]
    spacing = header[1::3]
    points = [int(n) for n in header[2::3]]
    cells = [n - 1 for n in points]
    if values.size != int(np.prod(points)):
        raise ConfigurationError(f"{path}: expected {int(np.prod(points))} values, got {values.size}")
    grid = build_grid(origin, [h * n for h, n in zip(spacing, cells)], cells, min_cells=1)
    shaped = values.reshape(points, order="F")
    return ScalarField(grid, shaped, np.zeros(grid.shape, dtype=bool))
