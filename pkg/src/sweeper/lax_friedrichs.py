"""Lax-Friedrichs numerical Hamiltonian."""

from typing import Sequence

import numba as nb
import numpy as np

from ..exceptions import ConfigurationError
from ..problem import HamiltonianSpec

_numba_setting = {"nogil": True, "cache": True}


@nb.njit(**_numba_setting)
def lax_friedrichs_value(speed, drift, alpha, um, up, vm, vp, wm, wp):
    """Compiled form for H = speed*|p| + drift.p with up to three axes.

    Unused axes are passed with zero derivatives and drop out.
    """
    pu = 0.5 * (um + up)
    pv = 0.5 * (vm + vp)
    pw = 0.5 * (wm + wp)
    h = speed * np.sqrt(pu * pu + pv * pv + pw * pw) + drift[0] * pu + drift[1] * pv + drift[2] * pw
    return h - 0.5 * (alpha[0] * (up - um) + alpha[1] * (vp - vm) + alpha[2] * (wp - wm))


def lax_friedrichs(
    hamiltonian: HamiltonianSpec,
    x: Sequence[float],
    minus: Sequence[float],
    plus: Sequence[float],
) -> float:
    """
    H(x, (p- + p+)/2) - sum_i alpha_i/2 (p+_i - p-_i).

    Args:
        hamiltonian: Hamiltonian with its per-axis bounds alpha
        x: Position
        minus: One-sided derivatives per axis, wind blowing in the + direction
        plus: One-sided derivatives per axis, wind blowing in the - direction

    Returns:
        The numerical Hamiltonian value
    """
    minus = np.asarray(minus, dtype=float)
    plus = np.asarray(plus, dtype=float)
    if minus.shape != (hamiltonian.dim,) or plus.shape != (hamiltonian.dim,):
        raise ConfigurationError(f"expected {hamiltonian.dim} derivative components per side")
    average = 0.5 * (minus + plus)
    dissipation = 0.5 * float(np.dot(hamiltonian.alpha, plus - minus))
    return hamiltonian.evaluate(x, average) - dissipation
