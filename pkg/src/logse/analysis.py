"""Diagnostics for long-time dynamics: density centroids, peak tracking,
and local-minimum counting on time series."""

from __future__ import annotations

import numpy as np

from .core import ComplexField


def half_domain_centroids(u: ComplexField, split_x: float = 0.0) -> tuple[float, float]:
    """Density centroids of the two half-domains x < split_x and x >= split_x.

    A half with no density returns nan for its centroid.
    """
    x = u.grid.nodes
    dens = np.abs(u.values) ** 2
    out = []
    for side in (x < split_x, x >= split_x):
        w = dens[side].sum()
        out.append(float((x[side] * dens[side]).sum() / w) if w > 0 else float("nan"))
    return out[0], out[1]


def peak_positions(u: ComplexField, rel_height: float = 0.2) -> np.ndarray:
    """x positions of local maxima of |u| at least rel_height * max|u|,
    with periodic wrap at the ends."""
    amp = np.abs(u.values)
    peak = (amp > np.roll(amp, 1)) & (amp >= np.roll(amp, -1))
    peak &= amp >= rel_height * amp.max()
    return u.grid.nodes[peak]


def two_peak_distance(u: ComplexField, rel_height: float = 0.2) -> float:
    """Distance between the two tallest peaks of |u|; 0.0 when fewer than
    two peaks stand above the threshold (merged state)."""
    amp = np.abs(u.values)
    peak = (amp > np.roll(amp, 1)) & (amp >= np.roll(amp, -1))
    peak &= amp >= rel_height * amp.max()
    idx = np.nonzero(peak)[0]
    if idx.size < 2:
        return 0.0
    order = np.argsort(amp[idx])[::-1]
    x = u.grid.nodes
    return float(abs(x[idx[order[0]]] - x[idx[order[1]]]))


def count_local_minima(series, tol: float = 0.0) -> int:
    """Number of interior local minima of a series, collapsing plateaus.

    A run of near-equal values (within tol) counts once when the series
    strictly decreases into it and strictly increases out of it.
    """
    s = np.asarray(series, dtype=float)
    if s.size < 3:
        return 0
    # compress plateaus to single representatives
    keep = [0]
    for i in range(1, s.size):
        if abs(s[i] - s[keep[-1]]) > tol:
            keep.append(i)
    c = s[keep]
    if c.size < 3:
        return 0
    return int(np.sum((c[1:-1] < c[:-2] - tol) & (c[1:-1] < c[2:] - tol)))
