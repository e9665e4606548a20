"""Interpolation stencils and prolongation onto the finest grid."""

from .interpolation import (
    InterpPoint,
    lagrange3_interp_1d,
    locate,
    stencil_centers,
    weno3_interp_1d,
    weno3_interp_weights,
)
from .prolongation import ProlongationMethod, prolongate, refine_axis

__all__ = [
    "InterpPoint",
    "lagrange3_interp_1d",
    "locate",
    "stencil_centers",
    "weno3_interp_1d",
    "weno3_interp_weights",
    "ProlongationMethod",
    "prolongate",
    "refine_axis",
]
