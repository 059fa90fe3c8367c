"""Exact Gaussian solutions: Gaussian data stays Gaussian, so the PDE
reduces to two ODEs for the width factor r(t) and the phase phi(t):

    phi' = alpha0/r^2 + lam*ln|b0|^2 - lam*ln r,      phi(0) = 0
    r''  = 4*alpha0^2/r^3 + 4*lam*alpha0/r,           r(0) = 1, r'(0) = -2 Im a0

with alpha0 = Re a0 > 0. The solution is assembled as

    u(x,t) = b0/sqrt(r) * e^{i(vx - v^2 t)} * e^{Y(x - 2vt - x0, t)}
    Y(x,t) = -i*phi - alpha0*x^2/(2 r^2) + i*(r'/r)*x^2/4.

lam < 0 with alpha0 = -lam gives r == 1: a Gausson, translating at speed 2v.
lam < 0 otherwise gives a time-periodic r: a breather. lam > 0 spreads,
r(t) ~ 2t*sqrt(lam*alpha0*ln t) for large t.

The r-equation has the first integral r'^2/2 + 2*alpha0^2/r^2
- 4*lam*alpha0*ln r, which gates the integrator's accuracy in the tests.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .core import ComplexField, ConfigurationError, Grid1D

BOUNDARY_AMPLITUDE_WARN = 1e-14


@dataclass(frozen=True)
class GaussianParams:
    """One Gaussian b0*exp(-a0*(x-x0)^2/2 + i*v*x); requires Re(a0) > 0."""

    b0: complex
    a0: complex
    v: float = 0.0
    x0: float = 0.0

    def __post_init__(self):
        if not complex(self.a0).real > 0.0:
            raise ConfigurationError(
                f"width parameter must have positive real part, got a0={self.a0}")

    @property
    def alpha0(self) -> float:
        return complex(self.a0).real


@dataclass
class GaussonOdeState:
    t: float
    r: float
    rdot: float
    phi: float


class OdePositivityError(RuntimeError):
    """r(t) left the positive half-line during integration."""


def _rhs(lam: float, alpha0: float, log_b0_sq: float, r: float, rdot: float):
    if r <= 0.0:
        raise OdePositivityError(f"width factor r = {r} is not positive")
    return (rdot,
            4.0 * alpha0 * alpha0 / r ** 3 + 4.0 * lam * alpha0 / r,
            alpha0 / (r * r) + lam * log_b0_sq - lam * math.log(r))


def _rk4_step(lam, alpha0, lb, r, rdot, phi, dt):
    k1 = _rhs(lam, alpha0, lb, r, rdot)
    k2 = _rhs(lam, alpha0, lb, r + 0.5 * dt * k1[0], rdot + 0.5 * dt * k1[1])
    k3 = _rhs(lam, alpha0, lb, r + 0.5 * dt * k2[0], rdot + 0.5 * dt * k2[1])
    k4 = _rhs(lam, alpha0, lb, r + dt * k3[0], rdot + dt * k3[1])
    r += dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
    rdot += dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
    phi += dt / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2])
    if r <= 0.0:
        raise OdePositivityError(f"width factor r = {r} is not positive")
    return r, rdot, phi


def default_ode_dt(t_end: float) -> float:
    return 1e-4 * min(1.0, t_end) if t_end > 0.0 else 1e-4


def integrate_ode(gp: GaussianParams, lam: float, t_end: float,
                  dt: float | None = None) -> GaussonOdeState:
    """Classical RK4 on (r, r', phi) with fixed step dt; the final partial
    step is shortened to land exactly on t_end."""
    if t_end < 0.0:
        raise ValueError(f"t_end must be nonnegative, got {t_end}")
    if abs(complex(gp.b0)) == 0.0:
        raise ConfigurationError("phase ODE needs |b0| > 0 (ln|b0|^2 appears)")
    r, rdot, phi = 1.0, -2.0 * complex(gp.a0).imag, 0.0
    if t_end == 0.0:
        return GaussonOdeState(0.0, r, rdot, phi)
    if dt is None:
        dt = default_ode_dt(t_end)
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    lb = 2.0 * math.log(abs(complex(gp.b0)))
    alpha0 = gp.alpha0
    n_full = int(t_end / dt)
    for _ in range(n_full):
        r, rdot, phi = _rk4_step(lam, alpha0, lb, r, rdot, phi, dt)
    tail = t_end - n_full * dt
    if tail > 0.0:
        r, rdot, phi = _rk4_step(lam, alpha0, lb, r, rdot, phi, tail)
    return GaussonOdeState(t_end, r, rdot, phi)


def integrate_ode_path(gp: GaussianParams, lam: float, t_end: float,
                       dt: float, sample_every: int = 1) -> list[GaussonOdeState]:
    """Like integrate_ode but returns sampled states along the way."""
    if abs(complex(gp.b0)) == 0.0:
        raise ConfigurationError("phase ODE needs |b0| > 0 (ln|b0|^2 appears)")
    lb = 2.0 * math.log(abs(complex(gp.b0)))
    alpha0 = gp.alpha0
    r, rdot, phi = 1.0, -2.0 * complex(gp.a0).imag, 0.0
    out = [GaussonOdeState(0.0, r, rdot, phi)]
    n_full = int(t_end / dt)
    for k in range(1, n_full + 1):
        r, rdot, phi = _rk4_step(lam, alpha0, lb, r, rdot, phi, dt)
        if k % sample_every == 0:
            out.append(GaussonOdeState(k * dt, r, rdot, phi))
    tail = t_end - n_full * dt
    if tail > 0.0:
        r, rdot, phi = _rk4_step(lam, alpha0, lb, r, rdot, phi, tail)
        out.append(GaussonOdeState(t_end, r, rdot, phi))
    return out


def width_first_integral(gp: GaussianParams, lam: float,
                         state: GaussonOdeState) -> float:
    """Conserved quantity of the r-equation: r'^2/2 + 2 alpha0^2/r^2
    - 4 lam alpha0 ln r."""
    a = gp.alpha0
    return 0.5 * state.rdot ** 2 + 2.0 * a * a / state.r ** 2 \
        - 4.0 * lam * a * math.log(state.r)


def exact_gaussian(gp: GaussianParams, lam: float, grid: Grid1D, t: float,
                   dt_ode: float | None = None) -> ComplexField:
    """Sample the exact Gaussian solution at time t on the grid nodes.

    Warns when the amplitude at the domain boundary exceeds 1e-14 (the
    formula lives on the whole line; periodic truncation must be benign).
    """
    if abs(complex(gp.b0)) == 0.0:
        return ComplexField(grid, np.zeros(grid.M, dtype=np.complex128))
    st = integrate_ode(gp, lam, t, dt_ode)
    x = grid.nodes
    xi = x - 2.0 * gp.v * t - gp.x0
    y = (-1j * st.phi
         - gp.alpha0 * xi * xi / (2.0 * st.r * st.r)
         + 0.25j * (st.rdot / st.r) * xi * xi)
    vals = (complex(gp.b0) / math.sqrt(st.r)) \
        * np.exp(1j * (gp.v * x - gp.v * gp.v * t) + y)
    edge = max(abs(vals[0]), abs(vals[-1]))
    if edge > BOUNDARY_AMPLITUDE_WARN:
        warnings.warn(
            f"exact Gaussian has amplitude {edge:.2e} at the domain boundary; "
            "enlarge the domain to keep the periodic truncation negligible",
            stacklevel=2)
    return ComplexField(grid, vals)


def classify(gp: GaussianParams, lam: float) -> str:
    """'gausson' (lam<0, alpha0=-lam, Im a0=0), 'breather' (other lam<0),
    or 'spreading' (lam>0)."""
    if lam == 0.0:
        raise ConfigurationError("lambda must be nonzero")
    if lam > 0.0:
        return "spreading"
    a0 = complex(gp.a0)
    if a0.real == -lam and a0.imag == 0.0:
        return "gausson"
    return "breather"
