import math

import numpy as np
import pytest

from logse.cnfd import (
    CnfdParams,
    CnfdState,
    F_eps,
    cnfd_step,
    discrete_energy,
    discrete_mass,
    evolve_cnfd,
    f_eps,
    g_eps,
)
from logse.core import ComplexField, ModelParams, make_grid, norm
from logse.errors import ConvergenceError
from logse.reference import GaussianParams, exact_gaussian

RNG = np.random.default_rng(31337)


def params(lam=-1.0, eps=1e-4, **kw):
    return CnfdParams(ModelParams(lam, eps), **kw)


class TestScalarFunctions:
    def test_f_eps_unit_band(self):
        eps = 1e-3
        p = ModelParams(1.0, eps)
        assert f_eps((1 - eps) ** 2, p) == pytest.approx(0.0, abs=1e-14)

    def test_f_eps_at_zero(self):
        p = ModelParams(2.0, 1e-5)
        assert f_eps(0.0, p) == pytest.approx(4.0 * math.log(1e-5), rel=1e-14)

    def test_f_eps_scalar_value(self):
        eps = 1e-6
        p = ModelParams(-1.0, eps)
        assert f_eps((math.e - eps) ** 2, p) == pytest.approx(-2.0, rel=1e-12)

    def test_f_eps_rejects_negative(self):
        with pytest.raises(ValueError):
            f_eps(-1e-3, ModelParams(1.0, 1e-3))

    def test_F_eps_at_zero(self):
        # the closed form does not vanish at 0: F(0) = -2 lam eps^2 ln eps
        for lam, eps in [(1.0, 1e-2), (-1.0, 1e-3)]:
            p = ModelParams(lam, eps)
            assert F_eps(0.0, p) == pytest.approx(-2 * lam * eps * eps * math.log(eps),
                                                  rel=1e-13)

    def test_F_eps_derivative_is_f_eps(self):
        p = ModelParams(-1.0, 1e-3)
        d = 1e-6
        approx = (F_eps(1.0 + d, p) - F_eps(1.0 - d, p)) / (2 * d)
        assert approx == pytest.approx(f_eps(1.0, p), abs=1e-6)

    def test_F_eps_lambda_linearity(self):
        pa = ModelParams(1.7, 1e-3)
        pb = ModelParams(-1.7, 1e-3)
        for rho in (0.0, 0.3, 2.5):
            assert F_eps(rho, pa) == pytest.approx(-F_eps(rho, pb), rel=1e-14)


class TestGEps:
    def test_equal_arguments_limit(self):
        p = ModelParams(1.0, 0.25)
        z = 0.7 - 0.2j
        out = g_eps(z, z, p)
        assert out == pytest.approx(f_eps(abs(z) ** 2, p) * z, rel=1e-13)

    def test_antipodal_zero(self):
        p = ModelParams(-1.0, 0.1)
        z = 1.3 + 0.4j
        assert g_eps(z, -z, p) == 0.0

    def test_divided_difference_value(self):
        # oracle: (F(4) - F(0))/4; F(0) = -2 lam eps^2 ln eps does not vanish
        # for this closed form, and the theta-integral equals the difference
        # of antiderivatives regardless of the constant
        from scipy.integrate import quad

        p = ModelParams(1.0, 0.5)
        out = g_eps(2.0, 0.0, p)
        assert out == pytest.approx((F_eps(4.0, p) - F_eps(0.0, p)) / 4.0,
                                    rel=1e-13)
        oracle = quad(lambda th: f_eps(4.0 * th, p), 0, 1,
                      epsabs=1e-14, epsrel=1e-14)[0] * 1.0
        assert out == pytest.approx(oracle, rel=1e-10)

    def test_symmetry_exact(self):
        rng = np.random.default_rng(2)
        p = ModelParams(-1.0, 1e-3)
        for _ in range(200):
            z1 = complex(rng.standard_normal(), rng.standard_normal())
            z2 = complex(rng.standard_normal(), rng.standard_normal())
            assert g_eps(z1, z2, p) == g_eps(z2, z1, p)

    def test_gauge_covariance(self):
        rng = np.random.default_rng(3)
        p = ModelParams(1.0, 1e-2)
        for _ in range(100):
            z1 = complex(rng.standard_normal(), rng.standard_normal())
            z2 = complex(rng.standard_normal(), rng.standard_normal())
            theta = rng.uniform(0, 2 * np.pi)
            ph = complex(np.exp(1j * theta))
            assert g_eps(ph * z1, ph * z2, p) == pytest.approx(
                ph * g_eps(z1, z2, p), rel=1e-12, abs=1e-14)

    def test_divided_difference_vs_quadrature(self):
        # independent oracle: adaptive quadrature of the theta-integral form
        from scipy.integrate import quad

        rng = np.random.default_rng(4)
        p = ModelParams(-1.0, 1e-2)
        worst = 0.0
        for _ in range(300):
            z1 = complex(rng.standard_normal(), rng.standard_normal()) * 1.5
            z2 = complex(rng.standard_normal(), rng.standard_normal()) * 1.5
            r1, r2 = abs(z1) ** 2, abs(z2) ** 2
            if abs(r1 - r2) <= 1e-6 * max(1.0, r1, r2):
                continue
            slope = quad(lambda th: f_eps(th * r1 + (1 - th) * r2, p), 0, 1,
                         epsabs=1e-13, epsrel=1e-13)[0]
            expected = slope * (z1 + z2) / 2
            got = g_eps(z1, z2, p)
            worst = max(worst, abs(got - expected))
        assert worst < 1e-9


class TestSummationByParts:
    def test_identity(self):
        for M in (16, 128):
            g = make_grid(-2.0, 5.0, M)
            h = g.h
            rng = np.random.default_rng(M)
            u = rng.standard_normal(M) + 1j * rng.standard_normal(M)
            v = rng.standard_normal(M) + 1j * rng.standard_normal(M)
            d2u = (np.roll(u, -1) - 2 * u + np.roll(u, 1)) / h ** 2
            d2v = (np.roll(v, -1) - 2 * v + np.roll(v, 1)) / h ** 2
            dpu = (np.roll(u, -1) - u) / h
            dpv = (np.roll(v, -1) - v) / h
            inner = lambda a, b: h * np.sum(a * np.conj(b))
            lhs = inner(-d2u, v)
            mid = inner(dpu, dpv)
            rhs = inner(u, -d2v)
            assert abs(lhs - mid) <= 1e-12 * max(1.0, abs(mid))
            assert abs(rhs - mid) <= 1e-12 * max(1.0, abs(mid))


class TestCnfdStep:
    def test_zero_field_one_iteration(self):
        g = make_grid(-1.0, 1.0, 32)
        state = CnfdState(ComplexField(g, np.zeros(32, dtype=complex)))
        out = cnfd_step(state, 0.01, g, params())
        assert np.all(out.field.values == 0.0)
        assert out.last_iter_count == 1
        assert out.step_count == 1

    def test_nonconvergence_raises(self):
        # tau * |lam ln eps| >> 1 puts the fixed point outside its
        # contraction region
        g = make_grid(-16.0, 16.0, 128)
        u0 = exact_gaussian(GaussianParams(np.pi ** -0.25, 1.0), -1.0, g, 0.0)
        cp = CnfdParams(ModelParams(-1.0, 1e-15), max_iter=30)
        with pytest.raises(ConvergenceError) as exc:
            cnfd_step(CnfdState(u0), 0.2, g, cp)
        assert exc.value.iterations == 30
        assert exc.value.residual > 0

    def test_mass_conserved_1000_steps(self):
        g = make_grid(-16.0, 16.0, 128)
        u0 = exact_gaussian(GaussianParams(np.pi ** -0.25, 1.0), -1.0, g, 0.0)
        cp = params(eps=1e-4, fp_tol=1e-12)
        state = CnfdState(u0)
        m0 = discrete_mass(u0)
        for _ in range(1000):
            state = cnfd_step(state, 1e-3, g, cp)
        assert abs(discrete_mass(state.field) - m0) / m0 < 10 * cp.fp_tol

    def test_energy_conserved_along_trajectory(self):
        g = make_grid(-16.0, 16.0, 128)
        u0 = exact_gaussian(GaussianParams(np.pi ** -0.25, 1.0, v=1.0), -1.0, g, 0.0)
        cp = params(eps=1e-4, fp_tol=1e-12)
        p = cp.model
        e0 = discrete_energy(u0, p)
        tr = evolve_cnfd(u0, 1e-3, 300, cp, observe_stride=300)
        e1 = discrete_energy(tr.final, p)
        assert abs(e1 - e0) / abs(e0) < 100 * cp.fp_tol

    def test_temporal_spatial_order_two(self):
        # coupled ladder tau = (2/5) h against a matched-eps fine reference
        from logse.splitting import SplitScheme, evolve

        p = ModelParams(-1.0, 1e-2)
        gp = GaussianParams(np.pi ** -0.25, 1.0, v=1.0)
        taus, errs = [], []
        for j in range(2, 5):
            tau = 2.0 ** -j / 5
            M = int(round(32 / (2.5 * tau)))
            gj = make_grid(-16.0, 16.0, M)
            u0 = exact_gaussian(gp, -1.0, gj, 0.0)
            tr = evolve_cnfd(u0, tau, round(1 / tau), CnfdParams(p, max_iter=400),
                             observe_stride=10 ** 9)
            tau_ref = tau / 100
            ref = evolve(u0, tau_ref, round(1 / tau_ref), SplitScheme.ST1, p,
                         observe_stride=10 ** 9).final
            taus.append(tau)
            errs.append(norm(ComplexField(gj, tr.final.values - ref.values), "L2"))
        order = np.polyfit(np.log(taus), np.log(errs), 1)[0]
        assert 1.8 <= order <= 2.2


class TestDiscreteInvariants:
    def test_zero_field_energy_constant_term(self):
        g = make_grid(0.0, 3.0, 32)
        p = ModelParams(-2.0, 1e-3)
        u = ComplexField(g, np.zeros(32, dtype=complex))
        assert discrete_mass(u) == 0.0
        expected = 3.0 * F_eps(0.0, p)
        assert discrete_energy(u, p) == pytest.approx(expected, rel=1e-13)

    def test_unit_constant_mass(self):
        g = make_grid(0.0, 1.0, 64)
        u = ComplexField(g, np.ones(64, dtype=complex))
        assert discrete_mass(u) == pytest.approx(1.0, rel=1e-14)

    def test_fp_iters_recorded(self):
        g = make_grid(-16.0, 16.0, 64)
        u0 = exact_gaussian(GaussianParams(np.pi ** -0.25, 1.0), -1.0, g, 0.0)
        tr = evolve_cnfd(u0, 0.01, 10, params(eps=1e-4), observe_stride=2)
        assert tr.fp_iters is not None
        assert tr.fp_iters[0] == 0  # initial record
        assert np.all(tr.fp_iters[1:] >= 1)
