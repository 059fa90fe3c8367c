"""Least-squares order fitting on log error vs log tau ladders."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FitResult:
    slope: float
    residual: float
    n_used: int
    floor_limited: bool


def fit_order(taus, errors, floor: float = 0.0, min_keep: int = 3) -> FitResult:
    """Slope of log(error) vs log(tau) after discarding points below 10x the
    floor.

    For analytic references the floor is 0 (nothing discarded); for numerical
    references the caller passes the minimum error of the set, which drops the
    rungs contaminated by the reference's own error. If fewer than min_keep
    points survive, the fit widens to the min_keep largest-error points and
    the result is flagged floor_limited.
    """
    taus = np.asarray(taus, dtype=float)
    errors = np.asarray(errors, dtype=float)
    if taus.size < 3:
        raise ValueError(f"need at least 3 ladder points, got {taus.size}")
    if taus.size != errors.size:
        raise ValueError("taus and errors must have equal length")
    if np.any(taus <= 0.0) or np.any(errors < 0.0):
        raise ValueError("ladder values must be positive")
    # exact-zero errors (self-comparisons) carry no slope information
    pos = errors > 0.0
    if int(pos.sum()) < 3:
        return FitResult(0.0, 0.0, int(pos.sum()), False)
    taus, errors = taus[pos], errors[pos]
    if np.allclose(errors, errors[0], rtol=1e-14):
        return FitResult(0.0, 0.0, int(taus.size), False)

    keep = errors >= 10.0 * floor
    floor_limited = False
    if int(keep.sum()) < min_keep:
        floor_limited = True
        order = np.argsort(errors)[::-1][:min(min_keep, errors.size)]
        keep = np.zeros(errors.size, dtype=bool)
        keep[order] = True
    lt = np.log(taus[keep])
    le = np.log(errors[keep])
    coeffs, res, *_ = np.polyfit(lt, le, 1, full=True)
    residual = float(np.sqrt(res[0] / lt.size)) if res.size else 0.0
    return FitResult(float(coeffs[0]), residual, int(keep.sum()), floor_limited)
