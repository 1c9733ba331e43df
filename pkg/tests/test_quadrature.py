"""Rotated-ray quadrature: segment integrals against antiderivatives, tail
radii against brute-force tail integrals, and the failure modes."""

import cmath
import math

import numpy as np
import pytest
import scipy.integrate
from hypothesis import given, settings
from hypothesis import strategies as st

from pointgreen import (
    FresnelIntegrand,
    HolomorphicDatum,
    NoDecayError,
    NonFiniteInputError,
    QuadratureConfig,
    ToleranceNotMetError,
    fresnel_semiaxis,
    gaussian_tail_radius,
    integrate_segment,
    psi_tail_radius,
)

SQRT_PI = 1.7724538509055159


def test_segment_oscillatory_antiderivative():
    res = integrate_segment(lambda z: np.exp(1j * math.pi * z), 0.0, 1.0)
    exact = (cmath.exp(1j * math.pi) - 1.0) / (1j * math.pi)
    assert res.value == pytest.approx(exact, abs=1e-13)
    assert abs(res.value - exact) <= res.error + 1e-15
    assert res.panels >= 1


def test_segment_complex_path_cubic():
    res = integrate_segment(lambda z: z * z, 1.0, 1.0 + 2.0j)
    assert res.value == pytest.approx(-4.0 - 2.0j / 3.0, rel=1e-13)


def test_segment_zero_length():
    res = integrate_segment(lambda z: z, 0.3j, 0.3j)
    assert res.value == 0.0 and res.error == 0.0 and res.panels == 0


def test_segment_rejects_nonfinite_integrand():
    with pytest.raises(NonFiniteInputError):
        integrate_segment(lambda z: np.full(z.shape, np.nan), 0.0, 1.0)


def test_segment_gives_up_on_noise():
    rng = np.random.default_rng(7)

    def noise(z):
        return rng.standard_normal(z.shape)

    with pytest.raises(ToleranceNotMetError):
        integrate_segment(noise, 0.0, 1.0, abs_tol=1e-12, max_depth=6)


def test_panel_budget_trips_before_depth_exhausts_memory():
    rng = np.random.default_rng(11)

    def noise(z):
        return rng.standard_normal(z.shape)

    with pytest.raises(ToleranceNotMetError, match="budget"):
        integrate_segment(noise, 0.0, 1.0, abs_tol=1e-12, max_depth=24)


@given(
    log_amp=st.floats(-5.0, 5.0),
    lin=st.floats(-3.0, 3.0),
    rate=st.floats(0.1, 4.0),
    log_target=st.floats(-30.0, -5.0),
)
@settings(max_examples=30, deadline=None)
def test_tail_radius_bounds_true_tail(log_amp, lin, rate, log_target):
    radius, log_bound = gaussian_tail_radius(log_amp, lin, rate, log_target)
    assert log_bound <= log_target
    true_tail, _ = scipy.integrate.quad(
        lambda u: math.exp(log_amp + lin * u - rate * u * u),
        radius,
        np.inf,
    )
    assert true_tail <= math.exp(log_bound) * (1.0 + 1e-9)


def test_tail_radius_handles_huge_amplitudes():
    radius, log_bound = gaussian_tail_radius(5000.0, 200.0, 0.25, math.log(1e-12))
    assert math.isfinite(radius) and radius > 0.0
    assert log_bound <= math.log(1e-12)


def test_tail_radius_rejects_nonpositive_rate():
    with pytest.raises(NoDecayError):
        gaussian_tail_radius(0.0, 0.0, 0.0, -10.0)
    with pytest.raises(NoDecayError):
        gaussian_tail_radius(0.0, 0.0, -1.0, -10.0)


def test_fresnel_quadratic_phase_oracle():
    # int_0^inf e^{i y^2 / 8} dy = sqrt(pi) (1 + i), rotation-independent.
    integrand = FresnelIntegrand(
        eval=lambda z: np.exp(0.125j * z * z), envelope_a=1.0, decay_eps=0.125
    )
    exact = SQRT_PI * (1.0 + 1.0j)
    for theta in (math.pi / 8.0, math.pi / 6.0, math.pi / 5.0, None):
        res = fresnel_semiaxis(integrand, theta=theta)
        assert res.value == pytest.approx(exact, rel=1e-11)
        assert abs(res.value - exact) <= res.error + 1e-14
        assert res.tail_radius > 0.0
        assert res.tail_bound <= 0.5 * 1e-12


def test_fresnel_bare_callable_needs_envelope():
    f = lambda z: np.exp(0.125j * z * z)
    with pytest.raises(TypeError):
        fresnel_semiaxis(f)
    res = fresnel_semiaxis(f, envelope_a=1.0, decay_eps=0.125)
    assert res.value == pytest.approx(SQRT_PI * (1.0 + 1.0j), rel=1e-11)


def test_fresnel_zero_envelope_short_circuits():
    res = fresnel_semiaxis(lambda z: z, envelope_a=0.0, decay_eps=1.0)
    assert res.value == 0.0 and res.panels == 0


def test_fresnel_rejects_nonpositive_decay():
    with pytest.raises(NoDecayError):
        fresnel_semiaxis(lambda z: z, envelope_a=1.0, decay_eps=0.0)


def test_fresnel_respects_tolerance_config():
    integrand = FresnelIntegrand(
        eval=lambda z: np.exp(0.125j * z * z), envelope_a=1.0, decay_eps=0.125
    )
    loose = fresnel_semiaxis(integrand, QuadratureConfig(abs_tol=1e-6, rel_tol=1e-6))
    tight = fresnel_semiaxis(integrand, QuadratureConfig(abs_tol=1e-12, rel_tol=1e-12))
    assert loose.tail_radius <= tight.tail_radius
    exact = SQRT_PI * (1.0 + 1.0j)
    assert abs(loose.value - exact) <= loose.error + 1e-14
    assert tight.error < loose.error + 1e-13


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(theta_rot=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(max_depth=0)
    with pytest.raises(ValueError):
        QuadratureConfig(tail_safety=0.5)


def test_holomorphic_datum_envelope_slack():
    datum = HolomorphicDatum(
        eval=lambda z: np.exp(1j * 2.0 * z),
        bound_a=1.0,
        bound_b=2.0,
        sector_half_angle=math.pi / 4.0,
    )
    zs = np.array([0.3, 1.0 + 0.5j, -2.0 - 0.25j])
    assert datum.envelope_slack(zs) <= 1e-12
    with pytest.raises(ValueError):
        HolomorphicDatum(lambda z: z, -1.0, 0.0, math.pi / 4.0)
    with pytest.raises(ValueError):
        HolomorphicDatum(lambda z: z, 1.0, 0.0, math.pi)


def test_psi_tail_radius_envelope_integrates_below_target():
    t, x, a, b, theta = 1.0, 0.5, 2.0, 1.0, math.pi / 4.0
    eps = 1e-10
    radius = psi_tail_radius(t, x, a, b, theta, eps)
    growth = b + abs(x) / (2.0 * t)
    amp = a / (2.0 * math.sqrt(math.pi * t)) * math.exp(t * growth * growth * math.tan(theta))
    rate = math.sin(2.0 * theta) / (8.0 * t)
    tail, _ = scipy.integrate.quad(
        lambda y: amp * math.exp(-rate * y * y), radius, np.inf
    )
    assert tail <= eps


def test_psi_tail_radius_monotone_in_target():
    r_loose = psi_tail_radius(0.5, 1.0, 1.0, 0.5, math.pi / 4.0, 1e-6)
    r_tight = psi_tail_radius(0.5, 1.0, 1.0, 0.5, math.pi / 4.0, 1e-14)
    assert r_tight > r_loose > 0.0


def test_psi_tail_radius_edge_cases():
    assert psi_tail_radius(1.0, 0.0, 0.0, 1.0, math.pi / 4.0, 1e-10) == 0.0
    with pytest.raises(ValueError):
        psi_tail_radius(0.0, 0.0, 1.0, 1.0, math.pi / 4.0, 1e-10)
    with pytest.raises(ValueError):
        psi_tail_radius(1.0, 0.0, 1.0, 1.0, math.pi / 2.0, 1e-10)
    with pytest.raises(ValueError):
        psi_tail_radius(1.0, 0.0, 1.0, 1.0, math.pi / 4.0, 0.0)
