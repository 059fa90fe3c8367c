"""Periodic 1D grid, complex field container, discrete norms and observables.

Everything downstream (flows, time steppers, experiment harness) works on a
uniform periodic grid of M nodes x_j = a + j*h, h = (b-a)/M, with the value
at x_M identified with the value at x_0. Fourier transforms use the
unnormalized forward DFT (numpy convention); the inverse carries the 1/M.

The logarithm convention throughout the package: ln(X)^2 means ln(X^2), i.e.
2*ln(X). This keeps the regularized nonlinearity consistent with the
unregularized u*ln|u|^2 limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np


class ConfigurationError(ValueError):
    """Invalid grid or model parameters."""


class GridMismatchError(ValueError):
    """Operation mixing fields that live on different grids."""


@dataclass(frozen=True)
class Grid1D:
    """Uniform periodic grid on (a, b) with an even number of nodes M.

    Nodes are x_j = a + j*h for j = 0..M-1; x_M is identified with x_0.
    ``wavenumbers`` follows the DFT index ordering
    (2*pi/(b-a)) * [0, 1, ..., M/2-1, -M/2, ..., -1].
    """

    a: float
    b: float
    M: int

    @property
    def h(self) -> float:
        return (self.b - self.a) / self.M

    @cached_property
    def nodes(self) -> np.ndarray:
        return self.a + self.h * np.arange(self.M)

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        k = np.fft.fftfreq(self.M, d=1.0 / self.M)  # [0..M/2-1, -M/2..-1]
        return (2.0 * math.pi / (self.b - self.a)) * k

    @cached_property
    def deriv_multiplier(self) -> np.ndarray:
        # i*mu, with the Nyquist mode zeroed so the first derivative of a
        # real field stays conjugate-symmetric.
        mult = 1j * self.wavenumbers
        mult[self.M // 2] = 0.0
        mult.flags.writeable = False
        return mult


@dataclass(frozen=True)
class ModelParams:
    """Nonlinearity strength lambda (nonzero) and regularization epsilon > 0."""

    lam: float
    eps: float

    def __post_init__(self):
        if self.lam == 0.0:
            raise ConfigurationError("lambda must be nonzero")
        if not self.eps > 0.0:
            raise ConfigurationError(f"epsilon must be positive, got {self.eps}")


def make_grid(a: float, b: float, M: int) -> Grid1D:
    """Validated Grid1D constructor: b > a, M even and >= 4."""
    if not b > a:
        raise ConfigurationError(f"domain endpoints must satisfy b > a, got ({a}, {b})")
    if M != int(M) or M < 4:
        raise ConfigurationError(f"node count M must be an integer >= 4, got {M}")
    if M % 2 != 0:
        raise ConfigurationError(f"node count M must be even, got {M}")
    return Grid1D(float(a), float(b), int(M))


@dataclass
class ComplexField:
    """Complex samples u_j at the grid nodes (length M, periodic wrap)."""

    grid: Grid1D
    values: np.ndarray

    @classmethod
    def from_values(cls, grid: Grid1D, values) -> "ComplexField":
        """Validating constructor: casts, copies, and checks the length."""
        vals = np.asarray(values, dtype=np.complex128).copy()
        if vals.shape != (grid.M,):
            raise ConfigurationError(
                f"field length {vals.shape} does not match grid M={grid.M}")
        return cls(grid, vals)

    def copy(self) -> "ComplexField":
        return ComplexField(self.grid, self.values.copy())


def require_same_grid(u: ComplexField, v: ComplexField) -> None:
    if u.grid != v.grid:
        raise GridMismatchError(
            f"fields live on different grids: {u.grid} vs {v.grid}")


def is_finite(u: ComplexField) -> bool:
    return bool(np.all(np.isfinite(u.values.view(np.float64))))


def spectral_derivative(u: ComplexField) -> ComplexField:
    """First derivative via the DFT: multiply coefficients by i*mu, invert.

    The Nyquist contribution is zeroed (see Grid1D.deriv_multiplier).
    """
    hat = np.fft.fft(u.values)
    return ComplexField(u.grid, np.fft.ifft(u.grid.deriv_multiplier * hat))


def mass(u: ComplexField) -> float:
    """Discrete mass h * sum_j |u_j|^2."""
    v = u.values
    return u.grid.h * float(np.sum(v.real * v.real + v.imag * v.imag))


def momentum(u: ComplexField) -> float:
    """Discrete momentum Im(h * sum_j conj(u_j) * (Du)_j), spectral Du."""
    du = spectral_derivative(u)
    return u.grid.h * float(np.sum(np.conj(u.values) * du.values).imag)


def energy_split(u: ComplexField, p: ModelParams) -> tuple[float, float]:
    """(kinetic, interaction) parts of the regularized energy.

    kinetic     = h * sum |(Du)_j|^2                     (spectral Du)
    interaction = h * sum [ 2*lam*eps*|u| + 2*lam*|u|^2*ln(eps+|u|)
                            - 2*lam*eps^2*ln(1+|u|/eps) ]
    Their sum is the regularized total energy.
    """
    h = u.grid.h
    du = spectral_derivative(u).values
    kinetic = h * float(np.sum(du.real * du.real + du.imag * du.imag))
    amp = np.abs(u.values)
    lam, eps = p.lam, p.eps
    dens = (2.0 * lam * eps) * amp \
        + (2.0 * lam) * (amp * amp) * np.log(eps + amp) \
        - (2.0 * lam * eps * eps) * np.log1p(amp / eps)
    return kinetic, h * float(np.sum(dens))


def energy_regularized(u: ComplexField, p: ModelParams) -> float:
    """Regularized total energy; exactly kinetic + interaction of energy_split."""
    kin, inter = energy_split(u, p)
    return kin + inter


def energy_log(u: ComplexField, lam: float) -> float:
    """Unregularized energy h * sum [|Du|^2 + lam*|u|^2*ln|u|^2], 0*ln 0 = 0.

    The eps -> 0 limit of the regularized energy; used by the
    regularization-error studies.
    """
    h = u.grid.h
    du = spectral_derivative(u).values
    kinetic = h * float(np.sum(du.real * du.real + du.imag * du.imag))
    a2 = np.abs(u.values) ** 2
    dens = np.zeros_like(a2)
    pos = a2 > 0.0
    dens[pos] = a2[pos] * np.log(a2[pos])
    return kinetic + lam * h * float(np.sum(dens))


def h1_seminorm(u: ComplexField) -> float:
    """Forward-difference seminorm: (h * sum |(u_{j+1}-u_j)/h|^2)^(1/2)."""
    v = u.values
    d = (np.roll(v, -1) - v) / u.grid.h
    return math.sqrt(u.grid.h * float(np.sum(d.real * d.real + d.imag * d.imag)))


def norm(u: ComplexField, kind: str = "L2") -> float:
    """Discrete norms: L2, H1 = L2 + forward-difference seminorm, Linf.

    Note the H1 norm is the *sum* of the L2 norm and the seminorm, not a
    root-sum-of-squares.
    """
    if kind == "L2":
        return math.sqrt(mass(u))
    if kind == "H1":
        return math.sqrt(mass(u)) + h1_seminorm(u)
    if kind == "Linf":
        return float(np.max(np.abs(u.values))) if u.grid.M else 0.0
    raise ConfigurationError(f"unknown norm kind {kind!r}; expected L2, H1 or Linf")


def error_field(u: ComplexField, v: ComplexField) -> ComplexField:
    """Pointwise difference u - v; the fields must share a grid."""
    require_same_grid(u, v)
    return ComplexField(u.grid, u.values - v.values)
