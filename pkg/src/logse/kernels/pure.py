"""Numpy implementations of the pointwise hot kernels.

These are the reference semantics; ``logse.kernels._speedups`` is a compiled
mirror of exactly these formulas. Keep the two in lockstep (the test suite
checks elementwise parity).
"""

import numpy as np

BACKEND = "python"

#: relative width of the band where the divided difference of F switches to
#: its limit form (it loses all digits when |z1|^2 ~ |z2|^2).
DEGENERATE_ETA = 1e-12


def log_phase_apply(u: np.ndarray, coeff: float, eps: float) -> np.ndarray:
    """Pointwise u_j * exp(i * coeff * ln(eps + |u_j|)).

    The modulus is preserved; |u| is evaluated via hypot (numpy's complex
    abs) so large fields cannot overflow.
    """
    u = np.asarray(u, dtype=np.complex128)
    phase = coeff * np.log(eps + np.abs(u))
    return u * np.exp(1j * phase)


def f_eps_arr(rho: np.ndarray, lam: float, eps: float) -> np.ndarray:
    """Regularized log density 2*lam*ln(eps + sqrt(rho)), rho >= 0."""
    rho = np.asarray(rho, dtype=np.float64)
    return (2.0 * lam) * np.log(eps + np.sqrt(rho))


def F_eps_arr(rho: np.ndarray, lam: float, eps: float) -> np.ndarray:
    """Antiderivative of f_eps: 2*lam*(rho-eps^2)*ln(eps+sqrt(rho)) - lam*rho
    + 2*eps*lam*sqrt(rho)."""
    rho = np.asarray(rho, dtype=np.float64)
    root = np.sqrt(rho)
    return (2.0 * lam) * (rho - eps * eps) * np.log(eps + root) \
        - lam * rho + (2.0 * eps * lam) * root


def g_eps_arr(z1: np.ndarray, z2: np.ndarray, lam: float, eps: float,
              eta: float = DEGENERATE_ETA) -> np.ndarray:
    """Divided-difference nonlinearity (F(|z1|^2)-F(|z2|^2))/(|z1|^2-|z2|^2)
    * (z1+z2)/2, switching to f((|z1|^2+|z2|^2)/2)*(z1+z2)/2 on the
    degenerate band |r1-r2| <= eta * max(1, r1, r2).

    The divided difference of F is evaluated in the cancellation-free form

        slope = 2*lam*[(rhi-eps^2)*log1p(d/((shi+slo)(eps+slo)))/d
                       + ln(eps+slo)] - lam + 2*eps*lam/(shi+slo)

    with rhi >= rlo, s = sqrt(r), d = rhi - rlo; it is algebraically equal
    to (F(r1)-F(r2))/(r1-r2) and limits smoothly onto f_eps, with no digit
    loss for small d. Ordering by modulus keeps the exchange symmetry exact.
    """
    z1 = np.asarray(z1, dtype=np.complex128)
    z2 = np.asarray(z2, dtype=np.complex128)
    a1 = np.abs(z1)
    a2 = np.abs(z2)
    r1 = a1 * a1
    r2 = a2 * a2
    rhi = np.maximum(r1, r2)
    rlo = np.minimum(r1, r2)
    d = rhi - rlo
    degen = d <= eta * np.maximum(1.0, rhi)
    slope = np.empty_like(r1)
    slope[degen] = f_eps_arr(0.5 * (r1[degen] + r2[degen]), lam, eps)
    nd = ~degen
    shi = np.sqrt(rhi[nd])
    slo = np.sqrt(rlo[nd])
    dd = d[nd]
    slope[nd] = (2.0 * lam) * (
        (rhi[nd] - eps * eps) * np.log1p(dd / ((shi + slo) * (eps + slo))) / dd
        + np.log(eps + slo)) - lam + (2.0 * eps * lam) / (shi + slo)
    return slope * (0.5 * (z1 + z2))
