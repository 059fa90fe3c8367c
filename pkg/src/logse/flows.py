"""The two exact subflows of the splitting.

flow_A is the free-Schrodinger propagator: a pure phase e^{-i t mu_l^2} on
each DFT coefficient. flow_B is the pointwise logarithmic phase rotation
u_j -> u_j e^{-i t lam ln(eps+|u_j|)^2}; it couples no nodes and preserves
every modulus. Both accept negative t, which composition and adjointness
tests rely on.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .core import ComplexField, Grid1D, ModelParams


def phi_eps(z, p: ModelParams):
    """Regularized nonlinearity lam * z * ln(eps+|z|)^2 = 2*lam*z*ln(eps+|z|).

    Accepts a scalar or an array; |z| is evaluated via hypot so large inputs
    do not overflow.
    """
    if np.isscalar(z):
        zz = complex(z)
        return 2.0 * p.lam * zz * np.log(p.eps + abs(zz))
    z = np.asarray(z, dtype=np.complex128)
    return 2.0 * p.lam * z * np.log(p.eps + np.abs(z))


class FlowWorkspace:
    """Per-grid cache of dispersion phase tables e^{-i t mu^2}.

    A workspace belongs to one worker; it is not internally synchronized.
    """

    def __init__(self, grid: Grid1D):
        self.grid = grid
        self._tables: dict[float, np.ndarray] = {}

    def dispersion_phase(self, t: float) -> np.ndarray:
        table = self._tables.get(t)
        if table is None:
            mu = self.grid.wavenumbers
            table = np.exp(-1j * t * mu * mu)
            self._tables[t] = table
        return table


def flow_A(u: ComplexField, t: float, workspace: FlowWorkspace | None = None) -> ComplexField:
    """Free flow: hat(u)_l -> e^{-i t mu_l^2} hat(u)_l.

    An exact L2 isometry (up to roundoff); the Nyquist mode keeps its phase
    like every other mode.
    """
    if workspace is not None and workspace.grid == u.grid:
        table = workspace.dispersion_phase(t)
    else:
        mu = u.grid.wavenumbers
        table = np.exp(-1j * t * mu * mu)
    hat = np.fft.fft(u.values)
    return ComplexField(u.grid, np.fft.ifft(table * hat))


def flow_B(u: ComplexField, t: float, p: ModelParams) -> ComplexField:
    """Logarithmic phase flow: u_j -> u_j e^{-2i t lam ln(eps+|u_j|)}."""
    return ComplexField(u.grid, kernels.log_phase_apply(u.values, -2.0 * p.lam * t, p.eps))
