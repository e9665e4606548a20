"""Upwind, WENO and linear third-order derivative approximations on grid lines."""

from .stencils import (
    LINEAR_WEIGHT,
    StencilLine,
    biased_minus,
    biased_plus,
    derivative_samples,
    extrapolate_ghost,
    ghost_value,
    linear3_pair,
    upwind1,
    weno3_minus,
    weno3_minus_value,
    weno3_plus,
    weno3_plus_value,
    weno3_weight,
    weno3_weights,
)

__all__ = [
    "LINEAR_WEIGHT",
    "StencilLine",
    "biased_minus",
    "biased_plus",
    "derivative_samples",
    "extrapolate_ghost",
    "ghost_value",
    "linear3_pair",
    "upwind1",
    "weno3_minus",
    "weno3_minus_value",
    "weno3_plus",
    "weno3_plus_value",
    "weno3_weight",
    "weno3_weights",
]
