"""Splitting time steppers: Lie-Trotter and the two Strang arrangements.

One step advances u by tau composing the exact subflows:

    LT   u -> A(tau) B(tau) u
    ST1  u -> B(tau/2) A(tau) B(tau/2) u
    ST2  u -> A(tau/2) B(tau) A(tau/2) u

Every composition is an L2 isometry, so discrete mass is conserved to
roundoff regardless of tau.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .core import ComplexField, ModelParams, energy_split, is_finite, mass, momentum
from .errors import NanAbortError
from .flows import FlowWorkspace, flow_A, flow_B


class SplitScheme(Enum):
    LT = "LT"
    ST1 = "ST1"
    ST2 = "ST2"


def step(u: ComplexField, tau: float, scheme: SplitScheme, p: ModelParams,
         workspace: FlowWorkspace | None = None) -> ComplexField:
    """One splitting step of size tau (negative tau allowed for adjoint tests)."""
    if scheme is SplitScheme.LT:
        return flow_A(flow_B(u, tau, p), tau, workspace)
    if scheme is SplitScheme.ST1:
        half = 0.5 * tau
        return flow_B(flow_A(flow_B(u, half, p), tau, workspace), half, p)
    if scheme is SplitScheme.ST2:
        half = 0.5 * tau
        return flow_A(flow_B(flow_A(u, half, workspace), tau, p), half, workspace)
    raise ValueError(f"unknown scheme {scheme!r}")


@dataclass
class Trajectory:
    """Observable time series plus optional field snapshots of one run."""

    times: np.ndarray
    mass: np.ndarray
    momentum: np.ndarray
    e_total: np.ndarray
    e_kin: np.ndarray
    e_int: np.ndarray
    final: ComplexField
    snapshots: list[tuple[float, ComplexField]] = field(default_factory=list)
    fp_iters: np.ndarray | None = None  # CNFD only

    def observable_rows(self):
        """Rows in the observables CSV order: t, mass, momentum, E_total, E_kin, E_int."""
        cols = [self.times, self.mass, self.momentum,
                self.e_total, self.e_kin, self.e_int]
        if self.fp_iters is not None:
            cols.append(self.fp_iters)
        return list(zip(*cols))


class _Recorder:
    """Shared bookkeeping for evolve drivers: strides, snapshots, NaN aborts."""

    def __init__(self, u0: ComplexField, tau: float, n_steps: int, p: ModelParams,
                 observe_stride: int, snapshot_times, track_iters: bool = False):
        if tau <= 0.0:
            raise ValueError(f"time step must be positive, got {tau}")
        if n_steps < 1:
            raise ValueError(f"n_steps must be >= 1, got {n_steps}")
        if observe_stride < 1:
            raise ValueError(f"observe_stride must be >= 1, got {observe_stride}")
        self.tau = tau
        self.n_steps = n_steps
        self.p = p
        self.stride = observe_stride
        self.track_iters = track_iters
        self.rows: list[tuple] = []
        self.snapshots: list[tuple[float, ComplexField]] = []
        # snapshot at the nearest completed step to each requested time
        self.snap_steps = {}
        for t_req in (snapshot_times or ()):
            k = min(max(int(round(t_req / tau)), 0), n_steps)
            self.snap_steps.setdefault(k, k * tau)
        self.observe(0, u0, 0)

    def observe(self, k: int, u: ComplexField, iters: int):
        if not is_finite(u):
            raise NanAbortError(k, k * self.tau)
        if k % self.stride == 0 or k == self.n_steps:
            kin, inter = energy_split(u, self.p)
            row = (k * self.tau, mass(u), momentum(u), kin + inter, kin, inter)
            self.rows.append(row + (iters,) if self.track_iters else row)
        if k in self.snap_steps:
            self.snapshots.append((self.snap_steps[k], u.copy()))

    def build(self, final: ComplexField) -> Trajectory:
        cols = np.array(self.rows, dtype=np.float64).T
        return Trajectory(
            times=cols[0], mass=cols[1], momentum=cols[2],
            e_total=cols[3], e_kin=cols[4], e_int=cols[5],
            final=final, snapshots=self.snapshots,
            fp_iters=cols[6] if self.track_iters else None,
        )


def evolve(u0: ComplexField, tau: float, n_steps: int, scheme: SplitScheme,
           p: ModelParams, observe_stride: int = 1,
           snapshot_times=()) -> Trajectory:
    """March n_steps of size tau, recording observables every observe_stride
    steps (plus step 0 and the final step) and snapshots at the nearest step
    to each requested time. Aborts on non-finite fields."""
    rec = _Recorder(u0, tau, n_steps, p, observe_stride, snapshot_times)
    ws = FlowWorkspace(u0.grid)
    u = u0
    for k in range(1, n_steps + 1):
        u = step(u, tau, scheme, p, ws)
        rec.observe(k, u, 0)
    return rec.build(u)
