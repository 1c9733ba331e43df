"""Wave-function evolution: the quadrature route against closed forms, the
interface condition of the evolved plane wave, and the long-time limits."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pointgreen import (
    DomainError,
    HolomorphicDatum,
    NonFiniteInputError,
    QuadratureConfig,
    WaveField,
    asymptotic_defect,
    delta,
    delta_prime,
    dirichlet,
    evolve_grid,
    free,
    lambda_fn,
    lambda_quotient,
    mirror_datum,
    neumann,
    plane_wave_boundary,
    plane_wave_datum,
    psi,
    psi_asymptotic,
    psi_component,
    psi_plane_wave,
    psi_with_error,
    random_interaction,
    robin,
)

FAST = QuadratureConfig(abs_tol=1e-10, rel_tol=1e-10)

_NAMED = (
    free(),
    delta(1.0),
    delta(-1.0),
    delta_prime(1.5),
    dirichlet(),
    neumann(),
    robin(1.5, -0.8),
)


def _root_it(t):
    return cmath.sqrt(1j * t)


def _closed_free(t, x, k):
    # int_0^inf gfree(t, x, y) e^{iky} dy resolved by the half-line
    # Gaussian integral: (e^{ix^2/4t}/2) Lambda(-x/2sqrt(it) - ik sqrt(it)).
    rt = _root_it(t)
    return 0.5 * cmath.exp(0.25j * x * x / t) * lambda_fn(-x / (2.0 * rt) - 1j * k * rt)


def _closed_mirror(t, x, k):
    rt = _root_it(t)
    arm = abs(x) / (2.0 * rt)
    return 0.5 * cmath.exp(0.25j * x * x / t) * lambda_fn(arm - 1j * k * rt)


def _closed_layer(t, x, k, omega):
    rt = _root_it(t)
    arm = abs(x) / (2.0 * rt)
    return -rt * cmath.exp(0.25j * x * x / t) * lambda_quotient(
        arm + omega * rt, arm - 1j * k * rt
    )


@pytest.mark.parametrize("t", [0.3, 2.0])
@pytest.mark.parametrize("x", [0.9, -1.7])
@pytest.mark.parametrize("k", [0.0, 2.0, -1.0])
def test_free_component_matches_closed_form(t, x, k):
    got = psi_component("free", t, x, plane_wave_datum(k), cfg=FAST)
    assert got == pytest.approx(_closed_free(t, x, k), abs=1e-9)


@pytest.mark.parametrize("t", [0.3, 2.0])
@pytest.mark.parametrize("x", [0.9, -1.7])
@pytest.mark.parametrize("k", [0.0, 2.0])
def test_mirror_component_matches_closed_form(t, x, k):
    got = psi_component("0", t, x, plane_wave_datum(k), cfg=FAST)
    assert got == pytest.approx(_closed_mirror(t, x, k), abs=1e-9)


@pytest.mark.parametrize("omega", [1.2, -0.8])
@pytest.mark.parametrize("t", [0.3, 2.0])
@pytest.mark.parametrize("k", [0.0, -1.0])
def test_layer_component_matches_closed_form(omega, t, k):
    x = 0.9
    got = psi_component("1", t, x, plane_wave_datum(k), omega=omega, cfg=FAST)
    assert got == pytest.approx(_closed_layer(t, x, k, omega), abs=1e-9)


def test_mirror_component_frozen_value():
    # mpmath quadrature of the mirror moment at t=1, x=0.5, k=3, 40 digits.
    got = psi_component("0", 1.0, 0.5, plane_wave_datum(3.0))
    expected = complex(0.060050828073571917, 0.062043627892101095)
    assert got == pytest.approx(expected, abs=1e-11)
    assert _closed_mirror(1.0, 0.5, 3.0) == pytest.approx(expected, abs=1e-13)


def test_component_input_validation():
    datum = plane_wave_datum(1.0)
    with pytest.raises(ValueError):
        psi_component("2", 1.0, 1.0, datum)
    with pytest.raises(ValueError):
        psi_component("0", 1.0, 1.0, datum, omega=1.0)
    with pytest.raises(ValueError):
        psi_component("1", 1.0, 1.0, datum)
    with pytest.raises(NonFiniteInputError):
        psi_component("1", 1.0, 1.0, datum, omega=math.inf)
    with pytest.raises(TypeError):
        psi_component("free", 1.0, 1.0, lambda z: z)
    with pytest.raises(DomainError):
        psi_component("free", 0.0, 1.0, datum)
    with pytest.raises(DomainError):
        psi_component("free", 1.0, 0.0, datum)


def test_mirror_datum_reflects_and_keeps_envelope():
    datum = plane_wave_datum(2.0)
    mirrored = mirror_datum(datum)
    zs = np.array([0.4, -1.0 + 0.3j])
    assert np.allclose(mirrored.eval(zs), datum.eval(-zs))
    assert mirrored.bound_a == datum.bound_a
    assert mirrored.bound_b == datum.bound_b
    with pytest.raises(TypeError):
        mirror_datum(lambda z: z)


@pytest.mark.parametrize("u", _NAMED, ids=lambda u: f"phi={u.phi:.3f}")
def test_psi_quadrature_matches_plane_wave_closed_form(u):
    for t in (0.2, 5.0):
        for x in (-2.0, 0.3):
            for k in (-1.0, 3.0):
                value, err = psi_with_error(u, t, x, plane_wave_datum(k))
                exact = psi_plane_wave(u, t, x, k)
                assert abs(value - exact) <= max(1e-8, 4.0 * err)


def test_psi_quadrature_matches_closed_form_random():
    rng = np.random.default_rng(505)
    for _ in range(3):
        u = random_interaction(rng)
        value, err = psi_with_error(u, 0.7, -1.1, plane_wave_datum(2.0))
        exact = psi_plane_wave(u, 0.7, -1.1, 2.0)
        assert abs(value - exact) <= max(1e-8, 4.0 * err)


def test_psi_is_linear_in_the_datum():
    mix = HolomorphicDatum(
        eval=lambda z: 2.0 * np.exp(1j * z) - 0.5j * np.exp(-2j * z),
        bound_a=2.5,
        bound_b=2.0,
        sector_half_angle=1.5,
    )
    u = delta(1.0)
    t, x = 0.8, -0.6
    got = psi(u, t, x, mix, FAST)
    expected = 2.0 * psi_plane_wave(u, t, x, 1.0) - 0.5j * psi_plane_wave(u, t, x, -2.0)
    assert got == pytest.approx(expected, abs=1e-8)


def test_free_plane_wave_is_exact_exponential():
    u = free()
    for t, x, k in ((0.5, 1.0, 2.0), (3.0, -0.7, -1.0), (1e-4, 1.0, 0.0)):
        assert psi_plane_wave(u, t, x, k) == pytest.approx(
            cmath.exp(1j * (k * x - k * k * t)), rel=1e-12
        )


def test_plane_wave_rejects_bad_arguments():
    u = delta(1.0)
    with pytest.raises(DomainError):
        psi_plane_wave(u, -1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        psi_plane_wave(u, 1.0, 0.0, 1.0)
    with pytest.raises(NonFiniteInputError):
        psi_plane_wave(u, 1.0, 1.0, math.nan)


def _boundary_residual(u, t, k):
    values, slopes = plane_wave_boundary(u, t, k)
    jm = u.matrix()
    eye = np.eye(2, dtype=complex)
    dvec = np.array([slopes[0], -slopes[1]])
    return (eye - jm) @ values - 1j * (eye + jm) @ dvec


@pytest.mark.parametrize("u", _NAMED, ids=lambda u: f"phi={u.phi:.3f}")
def test_plane_wave_boundary_satisfies_interface_condition(u):
    for t in (0.1, 1.0, 10.0):
        for k in (0.0, 1.0, -3.0):
            assert float(np.abs(_boundary_residual(u, t, k)).max()) < 1e-12


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_plane_wave_boundary_interface_condition_random(seed):
    u = random_interaction(np.random.default_rng(seed))
    assert float(np.abs(_boundary_residual(u, 0.7, 2.0)).max()) < 1e-11


def test_plane_wave_boundary_limits_match_closed_form():
    u = robin(1.5, -0.8)
    t, k = 0.9, 1.3
    values, slopes = plane_wave_boundary(u, t, k)
    h = 1e-6
    for row, x in ((0, h), (1, -h)):
        near = psi_plane_wave(u, t, x, k)
        assert abs(near - (values[row] + slopes[row] * x)) < 1e-9


@pytest.mark.parametrize("c", [1.5, -0.8])
@pytest.mark.parametrize("k", [1.0, -2.0])
@pytest.mark.parametrize("x", [0.7, -1.3])
def test_delta_asymptotic_is_scattering_plus_bound_state(c, k, x):
    t = 7.0
    incident = cmath.exp(1j * (k * x - k * k * t))
    reflected = -(c / (c - 1j * abs(k))) * cmath.exp(1j * (abs(k * x) - k * k * t))
    bound = 0.0
    if c < 0.0:
        bound = (2.0 * c * c / (c * c + k * k)) * cmath.exp(c * abs(x) + 1j * c * c * t)
    assert psi_asymptotic(delta(c), t, x, k) == pytest.approx(
        incident + reflected + bound, rel=1e-12
    )


@pytest.mark.parametrize("c", [1.5, -0.8])
@pytest.mark.parametrize("k", [1.0, -2.0])
@pytest.mark.parametrize("x", [0.7, -1.3])
def test_delta_prime_asymptotic_is_scattering_plus_bound_state(c, k, x):
    t = 7.0
    sgn = 1.0 if x > 0 else -1.0
    incident = cmath.exp(1j * (k * x - k * k * t))
    reflected = (1j * k * sgn / (c - 1j * abs(k))) * cmath.exp(
        1j * (abs(k * x) - k * k * t)
    )
    bound = 0.0
    if c < 0.0:
        bound = -(2j * c * k * sgn / (c * c + k * k)) * cmath.exp(
            c * abs(x) + 1j * c * c * t
        )
    assert psi_asymptotic(delta_prime(c), t, x, k) == pytest.approx(
        incident + reflected + bound, rel=1e-12
    )


def test_constant_datum_limits():
    assert psi_asymptotic(dirichlet(), 5.0, 1.0, 0.0) == pytest.approx(0.0, abs=1e-15)
    assert psi_asymptotic(neumann(), 5.0, 1.0, 0.0) == pytest.approx(1.0, rel=1e-15)


@pytest.mark.parametrize(
    "u", [delta(1.5), delta_prime(-0.9), robin(1.5, -0.8)], ids=["d", "dp", "r"]
)
def test_asymptotic_defect_stays_bounded(u):
    defects = asymptotic_defect(u, 2.0, 1.3, (1e2, 1e3, 1e4))
    assert defects[-1] <= 2.0 * max(defects[0], 1e-9)


def test_asymptotic_defect_rejects_unordered_times():
    with pytest.raises(DomainError):
        asymptotic_defect(delta(1.0), 1.0, 1.0, (1.0, 1.0))
    with pytest.raises(DomainError):
        asymptotic_defect(delta(1.0), 1.0, 1.0, (2.0, 1.0))


def test_evolve_grid_matches_pointwise_evaluation():
    u = delta(-1.0)
    datum = plane_wave_datum(1.0)
    field = evolve_grid(u, (0.5, 2.0), (-1.0, 0.7), datum, FAST, datum_label="pw")
    assert field.t_values == (0.5, 2.0)
    assert field.x_values == (-1.0, 0.7)
    assert field.datum_label == "pw"
    assert field.interaction == u
    for i, t in enumerate(field.t_values):
        for j, x in enumerate(field.x_values):
            value, err = psi_with_error(u, t, x, datum, FAST)
            assert field.values[i, j] == value
            assert field.errors[i, j] == err
            assert err > 0.0
    with pytest.raises(TypeError):
        evolve_grid("not-an-interaction", (1.0,), (1.0,), datum, FAST)


def test_wave_field_validation():
    u = free()
    good = np.zeros((1, 2), dtype=complex)
    errs = np.zeros((1, 2))
    with pytest.raises(ValueError):
        WaveField((1.0,), (1.0,), good, errs, u, "bad-shape")
    with pytest.raises(NonFiniteInputError):
        WaveField(
            (1.0,), (1.0, 2.0), np.array([[1.0, np.nan]]), errs, u, "non-finite"
        )
