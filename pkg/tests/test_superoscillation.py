"""Band-limited sequences targeting a faster wave: exact rational
coefficient oracles, the two evaluation routes against each other, and the
conditioning-driven route switch."""

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from pointgreen import (
    DomainError,
    EvaluationOverflowError,
    NonFiniteInputError,
    QuadratureConfig,
    SuperoscillatingSequence,
    coefficient,
    conditioning,
    convergence_metric,
    delta,
    evolve_superoscillation,
    evolve_superoscillation_with_error,
    f_n,
    psi_plane_wave,
    psi_with_error,
    uses_closed_sum,
)


def _exact_coefficient(l: int, n: int, k: Fraction) -> Fraction:
    return math.comb(n, l) * ((1 + k) / 2) ** (n - l) * ((1 - k) / 2) ** l


def test_small_coefficients_are_exact():
    assert coefficient(2, 4, 2.0) == 3.375
    assert coefficient(0, 1, 3.0) == 2.0
    assert coefficient(1, 1, 3.0) == -1.0
    assert Fraction(3.375) == _exact_coefficient(2, 4, Fraction(2))


@pytest.mark.parametrize("n", [7, 12])
@pytest.mark.parametrize("k", [2, 3])
def test_coefficients_match_rational_oracle(n, k):
    for l in range(n + 1):
        exact = _exact_coefficient(l, n, Fraction(k))
        assert coefficient(l, n, float(k)) == pytest.approx(float(exact), rel=1e-14)


@pytest.mark.parametrize("n,k", [(9, 4), (16, 2), (11, -3)])
def test_rational_moments_pin_the_construction(n, k):
    # Unit mass and first moment k: the sequence equals 1 at the origin
    # and slopes like the target wave there.  Exact rational arithmetic.
    weights = [_exact_coefficient(l, n, Fraction(k)) for l in range(n + 1)]
    assert sum(weights) == 1
    assert sum(w * (n - 2 * l) for l, w in enumerate(weights)) == k * n


def test_inside_band_sequence_is_the_wave_itself():
    assert f_n(0.7, 25, 1.0) == pytest.approx(cmath.exp(0.7j), rel=1e-14)
    assert f_n(-1.2, 8, -1.0) == pytest.approx(cmath.exp(1.2j), rel=1e-14)


def test_closed_sum_agrees_with_factored_form():
    n, k = 20, 2.0
    assert uses_closed_sum(n, k)
    zs = np.array([0.0, 0.5, -1.8, 2.0, 0.3 + 0.4j, -1.0 - 0.2j])
    direct = f_n(zs, n, k)
    factored = (np.cos(zs / n) + 1j * k * np.sin(zs / n)) ** n
    assert np.abs(direct - factored).max() < 1e-8


def test_extreme_conditioning_switches_to_factored_evaluation():
    n, k = 80, 2.0
    assert not uses_closed_sum(n, k)
    zs = np.array([0.4, -1.5, 1.0 + 0.3j])
    expected = (np.cos(zs / n) + 1j * k * np.sin(zs / n)) ** n
    assert np.abs(f_n(zs, n, k) - expected).max() < 1e-12


def test_route_switch_boundary():
    assert uses_closed_sum(45, 2.0)
    assert not uses_closed_sum(46, 2.0)
    assert uses_closed_sum(80, 1.0)
    assert uses_closed_sum(120, 0.5)
    assert not uses_closed_sum(10, 100.0)


def test_conditioning_is_the_magnitude_sum():
    assert conditioning(10, 3.0) == pytest.approx(3.0**10, rel=1e-14)
    assert conditioning(8, -3.0) == pytest.approx(3.0**8, rel=1e-14)
    assert conditioning(5, 0.5) == pytest.approx(1.0, rel=1e-14)


def test_coefficient_input_validation():
    with pytest.raises(IndexError):
        coefficient(-1, 4, 2.0)
    with pytest.raises(IndexError):
        coefficient(5, 4, 2.0)
    with pytest.raises(TypeError):
        coefficient(1.5, 4, 2.0)
    with pytest.raises(DomainError):
        coefficient(0, 0, 2.0)
    with pytest.raises(NonFiniteInputError):
        coefficient(0, 4, math.inf)


def test_coefficient_overflow_is_reported():
    with pytest.raises(EvaluationOverflowError):
        coefficient(60, 120, 1e4)


def test_coefficient_exponent_route_for_tiny_factors():
    # (1+k)/2 collapses to 2^-51, pushing the partial exponent past the
    # direct-product window; the value must come back through exponent
    # arithmetic instead of underflowing to zero.
    k = -1.0 + 2.0**-50
    got = coefficient(1, 12, k)
    exact = _exact_coefficient(1, 12, Fraction(k))
    assert got != 0.0
    assert got == pytest.approx(float(exact), rel=1e-12)


def test_evolution_matches_explicit_weighted_sum():
    u = delta(1.0)
    t, x, n, k = 0.5, 0.8, 10, 2.0
    value, err = evolve_superoscillation_with_error(u, t, x, n, k)
    direct = sum(
        coefficient(l, n, k) * psi_plane_wave(u, t, x, 1.0 - 2.0 * l / n)
        for l in range(n + 1)
    )
    assert abs(value - direct) <= max(1e-11, 4.0 * err)
    assert evolve_superoscillation(u, t, x, n, k) == value


def test_evolution_routes_agree_at_moderate_order():
    # Closed per-frequency sums against contour quadrature of the factored
    # form: independent routes to the same evolution.
    u = delta(-1.0)
    t, x, n, k = 0.6, -0.9, 20, 2.0
    assert uses_closed_sum(n, k)
    closed, err_c = evolve_superoscillation_with_error(u, t, x, n, k)
    datum = SuperoscillatingSequence(n, k).datum()
    quad, err_q = psi_with_error(
        u, t, x, datum, QuadratureConfig(abs_tol=1e-9, rel_tol=1e-9)
    )
    assert abs(closed - quad) <= max(1e-7, 4.0 * (err_c + err_q))


def test_evolution_factored_route_engages():
    u = delta(1.0)
    value, err = evolve_superoscillation_with_error(u, 0.5, 0.8, 80, 2.0)
    assert not uses_closed_sum(80, 2.0)
    assert np.isfinite([value.real, value.imag]).all()
    assert 0.0 < err < 1e-6


def test_evolution_inside_band_reduces_to_plane_wave():
    u = delta(1.0)
    got = evolve_superoscillation(u, 0.7, 1.1, 10, 1.0)
    assert got == pytest.approx(psi_plane_wave(u, 0.7, 1.1, 1.0), rel=1e-12)


def test_convergence_metric_decreases_along_the_ladder():
    sups = [convergence_metric(n, 2.0) for n in (10, 20, 40, 80)]
    assert all(a > b for a, b in zip(sups, sups[1:]))
    assert sups[-1] < 0.5 * sups[0]


def test_convergence_metric_validation():
    with pytest.raises(DomainError):
        convergence_metric(10, 2.0, weight_rate=-1.0)
    with pytest.raises(DomainError):
        convergence_metric(10, 2.0, sector_half_angle=math.pi)
    with pytest.raises(DomainError):
        convergence_metric(10, 2.0, sample_radius=0.0)


def test_sequence_type_validates_and_delegates():
    seq = SuperoscillatingSequence(12, 2.5)
    assert seq.frequency(0) == 1.0
    assert seq.frequency(12) == -1.0
    assert seq.coefficient(3) == coefficient(3, 12, 2.5)
    assert seq.conditioning == conditioning(12, 2.5)
    assert seq.evaluate(0.4) == f_n(0.4, 12, 2.5)
    datum = seq.datum()
    assert datum.bound_a == seq.conditioning
    assert datum.bound_b == 1.0
    with pytest.raises(IndexError):
        seq.frequency(13)
    with pytest.raises(DomainError):
        SuperoscillatingSequence(121, 2.0)
    with pytest.raises(DomainError):
        SuperoscillatingSequence(10, 1.0)
    with pytest.raises(DomainError):
        SuperoscillatingSequence(0, 2.0)
