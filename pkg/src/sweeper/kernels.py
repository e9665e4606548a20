"""Compiled Gauss-Seidel stage passes of the fixed-point sweeping scheme.

Fields are handled as 3D arrays; 2D fields carry a trailing axis of length 1
and ``dim`` tells the kernel how many axes carry derivatives. Updates are
written in place, so every stencil sees the newest available values.
"""

import numba as nb
import numpy as np

from ..deriv.stencils import (
    LINEAR_WEIGHT,
    biased_minus,
    biased_plus,
    ghost_value,
    weno3_minus_value,
    weno3_plus_value,
)
from .lax_friedrichs import lax_friedrichs_value

_numba_setting = {"nogil": True, "cache": True}

FIRST_ORDER = 0
WENO3 = 1
LINEAR3 = 2


@nb.njit(**_numba_setting)
def _at(phi, i, j, k, axis, m):
    if axis == 0:
        return phi[m, j, k]
    if axis == 1:
        return phi[i, m, k]
    return phi[i, j, m]


@nb.njit(**_numba_setting)
def _sample(phi, i, j, k, axis, offset):
    """Line value at ``offset`` from (i, j, k); ghosts are extrapolated."""
    if axis == 0:
        pos = i
    elif axis == 1:
        pos = j
    else:
        pos = k
    n = phi.shape[axis]
    m = pos + offset
    if m < 0:
        return ghost_value(_at(phi, i, j, k, axis, 0), _at(phi, i, j, k, axis, 1),
                           _at(phi, i, j, k, axis, 2), -m)
    if m > n - 1:
        return ghost_value(_at(phi, i, j, k, axis, n - 1), _at(phi, i, j, k, axis, n - 2),
                           _at(phi, i, j, k, axis, n - 3), m - n + 1)
    return _at(phi, i, j, k, axis, m)


@nb.njit(**_numba_setting)
def _first_order_pair(phi, i, j, k, axis, h):
    """One-sided differences with a linear ghost at a box edge."""
    if axis == 0:
        pos = i
    elif axis == 1:
        pos = j
    else:
        pos = k
    n = phi.shape[axis]
    c = phi[i, j, k]
    if pos > 0:
        m1 = _at(phi, i, j, k, axis, pos - 1)
    else:
        m1 = 2.0 * c - _at(phi, i, j, k, axis, pos + 1)
    if pos < n - 1:
        p1 = _at(phi, i, j, k, axis, pos + 1)
    else:
        p1 = 2.0 * c - m1
    return (c - m1) / h, (p1 - c) / h


@nb.njit(**_numba_setting)
def one_sided_pair(phi, i, j, k, axis, h, eps, mode):
    """(minus, plus) derivative approximations along ``axis``."""
    if mode == FIRST_ORDER:
        return _first_order_pair(phi, i, j, k, axis, h)
    c = phi[i, j, k]
    m1 = _sample(phi, i, j, k, axis, -1)
    p1 = _sample(phi, i, j, k, axis, 1)
    m2 = _sample(phi, i, j, k, axis, -2)
    p2 = _sample(phi, i, j, k, axis, 2)
    if mode == WENO3:
        return (weno3_minus_value(m2, m1, c, p1, h, eps),
                weno3_plus_value(m1, c, p1, p2, h, eps))
    return (biased_minus(m2, m1, c, p1, h, LINEAR_WEIGHT),
            biased_plus(m1, c, p1, p2, h, LINEAR_WEIGHT))


@nb.njit(**_numba_setting)
def numerical_hamiltonian_at(phi, i, j, k, dim, spacing, alpha, speed, drift, eps, mode):
    um, up = one_sided_pair(phi, i, j, k, 0, spacing[0], eps, mode)
    vm = 0.0
    vp = 0.0
    wm = 0.0
    wp = 0.0
    if dim > 1:
        vm, vp = one_sided_pair(phi, i, j, k, 1, spacing[1], eps, mode)
    if dim > 2:
        wm, wp = one_sided_pair(phi, i, j, k, 2, spacing[2], eps, mode)
    return lax_friedrichs_value(speed, drift, alpha, um, up, vm, vp, wm, wp)


@nb.njit(**_numba_setting)
def rk_stage_pass(phi, fixed, rhs, dim, spacing, alpha, speed, drift, step, eps, mode, reverse):
    """
    One Runge-Kutta stage over all free points in one sweep ordering.

    ``phi[p] += step * (rhs[p] - H_hat(p))`` at each free point in turn,
    with ``reverse[a]`` selecting a descending loop on axis ``a``.
    """
    nx, ny, nz = phi.shape
    for a in range(nx):
        i = nx - 1 - a if reverse[0] else a
        for b in range(ny):
            j = ny - 1 - b if reverse[1] else b
            for c in range(nz):
                k = nz - 1 - c if reverse[2] else c
                if fixed[i, j, k]:
                    continue
                h_hat = numerical_hamiltonian_at(
                    phi, i, j, k, dim, spacing, alpha, speed, drift, eps, mode
                )
                phi[i, j, k] += step * (rhs[i, j, k] - h_hat)


@nb.njit(**_numba_setting)
def single_point_update(phi, rhs, i, j, k, dim, spacing, alpha, speed, drift, step, eps, mode):
    """Stage increment at one point without writing it."""
    h_hat = numerical_hamiltonian_at(phi, i, j, k, dim, spacing, alpha, speed, drift, eps, mode)
    return step * (rhs[i, j, k] - h_hat)


def as_kernel_array(values) -> np.ndarray:
    """Pad a per-axis tuple to the 3 entries the kernels index."""
    padded = np.ones(3, dtype=np.float64)
    padded[: len(values)] = values
    return padded
