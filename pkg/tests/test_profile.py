"""Kernel, substitution, quadrature, and profile tests.

Frozen reference values were computed with mpmath (50-digit tanh-sinh
quadrature of both the tau-space and xi-space forms, which agree).
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wigbarrier import (
    AccuracyError,
    QuadratureConfig,
    WignerProfile,
    compute_profile,
    integrate_decaying,
    kernel_weight,
    profile_batch,
    profile_derivatives,
    profile_value,
    tau_of_xi,
    xi_of_tau,
)

# independently computed, high-precision profile values
PROFILE_ORACLE = {
    (-0.4, 1.125): -0.1727821791252149542,
    (0.0, 2.5): -0.1775967713143383043,
    (0.3, -1.5): -0.2235689651710350635,
    (-0.4, 0.7): -0.02487865601586587645,
    (1.0, -3.0): -0.01405325404055182937,
    (2.0, 0.25): 0.01528855538645426393,
    (-1.0, 4.0): -0.0001023376330011465944,
}


class TestKernelWeight:
    def test_center_value_eps_zero(self):
        assert kernel_weight(0.0, 0.0) == pytest.approx(1.0 / (2.0 * math.pi), abs=1e-16)
        assert kernel_weight(0.0, 0.0).imag == 0.0

    def test_center_value_is_eps_independent(self):
        for eps in (7.3, -2.0, 0.125):
            assert kernel_weight(eps, 0.0) == kernel_weight(0.0, 0.0)

    def test_reference_point(self):
        # (1/(pi*sqrt(3))) * exp(-i*ln 3)
        value = kernel_weight(1.0, 1.0)
        assert value.real == pytest.approx(0.08358741909300407755, abs=1e-15)
        assert value.imag == pytest.approx(-0.1636669522235620863, abs=1e-15)

    @pytest.mark.parametrize("tau", [2.0, -2.0, 2.5, -17.0])
    def test_endpoint_is_domain_error(self, tau):
        with pytest.raises(ValueError):
            kernel_weight(0.5, tau)

    @pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
    def test_nonfinite_eps_rejected(self, bad):
        with pytest.raises(ValueError):
            kernel_weight(bad, 0.0)

    @given(
        eps=st.floats(-5, 5),
        tau=st.floats(-1.999, 1.999),
    )
    def test_hermitian_symmetry(self, eps, tau):
        direct = kernel_weight(eps, tau)
        mirrored = kernel_weight(eps, -tau)
        assert abs(mirrored - direct.conjugate()) < 1e-14

    @given(eps=st.floats(-5, 5), tau=st.floats(-1.999, 1.999))
    def test_modulus_is_eps_independent(self, eps, tau):
        expected = 1.0 / (math.pi * math.sqrt(4.0 - tau * tau))
        assert abs(kernel_weight(eps, tau)) == pytest.approx(expected, rel=1e-14)


class TestSubstitution:
    def test_origin_maps_to_origin(self):
        assert xi_of_tau(0.0) == 0.0
        assert tau_of_xi(0.0) == 0.0

    def test_endpoint_divergence(self):
        assert xi_of_tau(1.999999999) > 20.0
        with pytest.raises(ValueError):
            xi_of_tau(2.0)
        with pytest.raises(ValueError):
            xi_of_tau(-2.3)

    @given(tau=st.floats(-1.999, 1.999))
    def test_round_trip(self, tau):
        assert tau_of_xi(xi_of_tau(tau)) == pytest.approx(tau, abs=1e-14)

    @given(xi=st.floats(-30, 30))
    def test_inverse_stays_in_open_interval(self, xi):
        assert abs(tau_of_xi(xi)) < 2.0

    @given(xi=st.floats(-12, 12))
    def test_inverse_round_trip(self, xi):
        # recovery loses ~exp(|xi|)*1e-16 absolute as tau saturates, so the
        # tight check is confined to the window where that stays below 1e-10
        assert xi_of_tau(tau_of_xi(xi)) == pytest.approx(xi, abs=1e-10)


class TestIntegrateDecaying:
    def test_sech_integral(self):
        cfg = QuadratureConfig.for_point()
        value = integrate_decaying(lambda x: 1.0 / np.cosh(0.5 * x), cfg)
        assert value == pytest.approx(2.0 * math.pi, abs=1e-9)

    def test_zero_integrand(self):
        cfg = QuadratureConfig.for_point()
        assert integrate_decaying(lambda x: 0.0, cfg) == 0.0

    def test_gaussian(self):
        cfg = QuadratureConfig.for_point()
        value = integrate_decaying(lambda x: np.exp(-x * x), cfg)
        assert value == pytest.approx(math.sqrt(math.pi), abs=1e-12)

    def test_full_output_estimate(self):
        cfg = QuadratureConfig.for_point()
        value, estimate = integrate_decaying(
            lambda x: 1.0 / np.cosh(0.5 * x), cfg, full_output=True
        )
        assert 0.0 <= estimate <= cfg.tolerance

    def test_underresolved_oscillation_fails_check(self):
        # cos(120 xi) aliases on the default 0.05 spacing
        cfg = QuadratureConfig.for_point()
        with pytest.raises(AccuracyError):
            integrate_decaying(lambda x: np.cos(120.0 * x) / np.cosh(0.5 * x), cfg)


class TestQuadratureConfig:
    def test_defaults_scale_with_point(self):
        base = QuadratureConfig.for_point(eps=0.0, eta=0.0)
        far = QuadratureConfig.for_point(eps=2.0, eta=20.0)
        assert base.step == 0.05
        assert far.step == pytest.approx(0.5 / 23.0)
        assert base.xi_max == pytest.approx(2.0 * math.log(4.0 / 1e-10))

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"xi_max": -1.0, "step": 0.1},
            {"xi_max": 10.0, "step": 0.0},
            {"xi_max": 10.0, "step": 11.0},
            {"xi_max": 10.0, "step": 0.1, "tolerance": 0.0},
        ],
    )
    def test_invalid_configs_rejected(self, kwargs):
        with pytest.raises(ValueError):
            QuadratureConfig(**kwargs)


class TestProfileValue:
    def test_unit_value_at_origin(self):
        # analytic: (1/2pi) * integral sech(xi/2) dxi = 1
        assert profile_value(0.0, 0.0) == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize(("eps", "eta"), sorted(PROFILE_ORACLE))
    def test_against_oracle(self, eps, eta):
        assert profile_value(eps, eta) == pytest.approx(PROFILE_ORACLE[(eps, eta)], abs=1e-10)

    def test_even_in_eta_at_eps_zero(self):
        assert profile_value(0.0, 2.5) == pytest.approx(profile_value(0.0, -2.5), abs=1e-12)

    def test_reflection_symmetry_example(self):
        assert profile_value(-0.4, -1.0) == pytest.approx(profile_value(0.4, 1.0), abs=1e-12)

    def test_imaginary_residue_below_tolerance(self):
        # the sine component of the xi-space integrand is odd; its trapezoid
        # sum on the symmetric node grid is pure roundoff
        cfg = QuadratureConfig.for_point(eps=0.7, eta=1.3)
        n = max(1, math.ceil(cfg.xi_max / cfg.step))
        xi = np.arange(-2 * n, 2 * n + 1) * (0.5 * cfg.step)
        integrand = np.sin(2.0 * 1.3 * np.tanh(0.5 * xi) - 0.7 * xi) / np.cosh(0.5 * xi)
        residue = abs(0.5 * cfg.step * np.sum(integrand) / (2.0 * math.pi))
        assert residue < cfg.tolerance

    @given(
        eps=st.floats(-2, 2),
        eta=st.floats(-5, 5),
    )
    @settings(max_examples=25, deadline=None)
    def test_step_halving_converged(self, eps, eta):
        base = QuadratureConfig.for_point(eps=eps, eta=eta)
        halved = QuadratureConfig(base.xi_max, base.step / 2.0, base.tolerance)
        delta = abs(profile_value(eps, eta, base) - profile_value(eps, eta, halved))
        assert delta < base.tolerance

    def test_accuracy_error_on_coarse_config(self):
        with pytest.raises(AccuracyError):
            profile_value(0.0, 4.0, QuadratureConfig(xi_max=48.0, step=2.0))

    @pytest.mark.parametrize("bad", [math.nan, math.inf])
    def test_nonfinite_inputs_rejected(self, bad):
        with pytest.raises(ValueError):
            profile_value(bad, 0.0)
        with pytest.raises(ValueError):
            profile_value(0.0, bad)


class TestProfileDerivatives:
    def test_first_derivative_vanishes_at_symmetric_point(self):
        _, d1, _ = profile_derivatives(0.0, 0.0)
        assert d1 == 0.0

    @pytest.mark.parametrize(
        ("eps", "eta"), [(-0.4, 0.7), (0.3, -1.5), (1.0, 2.0), (0.0, 0.0)]
    )
    def test_matches_finite_differences(self, eps, eta):
        w, d1, d2 = profile_derivatives(eps, eta)
        h = 1e-4
        plus = profile_value(eps, eta + h)
        minus = profile_value(eps, eta - h)
        assert d1 == pytest.approx((plus - minus) / (2.0 * h), abs=1e-6)
        assert d2 == pytest.approx((plus - 2.0 * w + minus) / (h * h), abs=1e-6)

    def test_value_column_matches_profile_value(self):
        w, _, _ = profile_derivatives(0.3, -1.5)
        assert w == profile_value(0.3, -1.5)


class TestBatchAndContainer:
    def test_batch_matches_scalar_with_shared_config(self):
        etas = np.linspace(-2.0, 2.0, 7)
        cfg = QuadratureConfig.for_point(eps=0.4, eta=2.0)
        batch = profile_batch(0.4, etas, cfg=cfg)[:, 0]
        scalar = [profile_value(0.4, eta, cfg) for eta in etas]
        assert np.array_equal(batch, scalar)

    def test_compute_profile_with_derivatives(self):
        prof = compute_profile(-0.4, np.linspace(-3, 3, 11), derivatives=True)
        assert prof.d1 is not None and prof.d2 is not None
        assert np.isfinite(prof.values).all()

    def test_profile_requires_increasing_grid(self):
        with pytest.raises(ValueError):
            WignerProfile(0.0, np.array([0.0, 0.0, 1.0]), np.zeros(3))
        with pytest.raises(ValueError):
            WignerProfile(0.0, np.array([1.0, 0.0]), np.zeros(2))

    def test_profile_rejects_mismatched_lengths(self):
        with pytest.raises(ValueError):
            WignerProfile(0.0, np.array([0.0, 1.0]), np.zeros(3))
