import numpy as np
import pytest

from approximation.errors import BranchJump, PoleOnAxis
from approximation.unitary_core import (
    Target,
    UnitaryRational,
    dagger,
    error_curve,
    evaluate,
    normalize_coefficients,
    phase_derivative,
    phase_error,
    phase_error_values,
    sup_error,
    unwrap_from,
)

RNG = np.random.default_rng(7)
COEFFS = np.array([1.0 + 0.2j, -0.4 + 0.1j, 0.05 - 0.3j])


class TestTarget:
    def test_rejects_negative_frequency(self):
        with pytest.raises(ValueError):
            Target(omega=-1.0, n=1)

    def test_rejects_negative_degree(self):
        with pytest.raises(ValueError):
            Target(omega=1.0, n=-1)

    def test_degenerate_threshold(self):
        assert not Target(omega=0.99 * np.pi, n=0).degenerate
        assert Target(omega=np.pi, n=0).degenerate
        assert Target(omega=2 * np.pi, n=1).degenerate

    def test_evaluates_exponential(self):
        t = Target(omega=2.0, n=1)
        assert t(0.5) == pytest.approx(np.exp(1j))


def test_dagger_is_involution():
    np.testing.assert_allclose(dagger(dagger(COEFFS)), COEFFS)


def test_dagger_conjugates_on_imaginary_axis():
    r = UnitaryRational(COEFFS)
    x = RNG.uniform(-1, 1, 50)
    np.testing.assert_allclose(r.p_dagger(1j * x), np.conj(r.p(1j * x)), rtol=1e-14)


def test_values_are_unimodular():
    r = UnitaryRational(COEFFS)
    x = np.linspace(-1, 1, 301)
    np.testing.assert_allclose(np.abs(r(x)), 1.0, atol=1e-14)


def test_real_rescaling_leaves_r_unchanged():
    x = np.linspace(-1, 1, 51)
    np.testing.assert_allclose(UnitaryRational(-3.0 * COEFFS)(x), UnitaryRational(COEFFS)(x),
                               atol=1e-14)


def test_normalize_scales_to_unit_max_and_fixes_sign():
    a = normalize_coefficients(-2.0 * COEFFS)
    assert np.max(np.abs(a)) == pytest.approx(1.0)
    assert a[0].real > 0
    np.testing.assert_allclose(a, COEFFS / np.max(np.abs(COEFFS)))


def test_normalize_rejects_zero():
    with pytest.raises(ValueError):
        normalize_coefficients([0.0, 0.0])


def test_coefficients_are_read_only():
    r = UnitaryRational(COEFFS)
    with pytest.raises(ValueError):
        r.coeffs[0] = 2.0


def test_one_is_identically_one():
    r = UnitaryRational.one(3)
    assert r.degree == 3
    np.testing.assert_array_equal(r(np.linspace(-1, 1, 5)), 1.0)


def test_pole_on_axis_raises():
    # p(z) = z - 0.5i vanishes at z = i * 0.5
    r = UnitaryRational([-0.5j, 1.0])
    with pytest.raises(PoleOnAxis) as info:
        evaluate(r, np.array([0.0, 0.5]))
    assert info.value.x == 0.5


def test_poles_are_roots_of_p():
    r = UnitaryRational([-0.5j, 1.0])
    np.testing.assert_allclose(r.poles(), [0.5j])


def test_unwrap_refuses_large_steps():
    xs = np.array([0.0, 0.1])
    with pytest.raises(BranchJump):
        unwrap_from(np.array([0.0, 2.0]), 0, xs)


def test_unwrap_keeps_anchor_principal_value():
    phi = np.linspace(2.5, 4.0, 16)
    wrapped = np.angle(np.exp(1j * phi))
    unwrapped = unwrap_from(wrapped, 15)
    np.testing.assert_allclose(unwrapped, phi - 2 * np.pi, atol=1e-12)


def test_phase_error_of_constant_one_is_linear():
    target = Target(omega=1.0, n=0)
    xs = np.linspace(-1, 1, 201)
    np.testing.assert_allclose(phase_error_values(UnitaryRational.one(), target, xs), -xs,
                               atol=1e-14)


def test_phase_error_samples_carry_pointwise_error():
    target = Target(omega=1.0, n=0)
    xs = np.linspace(-1, 1, 11)
    samples = phase_error(UnitaryRational.one(), target, xs)
    assert len(samples) == 11
    for s in samples:
        assert s.pointwise_error == pytest.approx(2 * abs(np.sin(s.phase_error / 2)), abs=1e-14)


@pytest.mark.parametrize("xs", [
    np.array([0.5, 0.0]),
    np.array([-1.5, 0.0, 1.0]),
    np.array([]),
])
def test_phase_error_validates_grid(xs):
    with pytest.raises(ValueError):
        phase_error_values(UnitaryRational.one(), Target(omega=1.0, n=0), xs)


def test_sup_error_of_constant_one():
    target = Target(omega=1.0, n=0)
    assert sup_error(UnitaryRational.one(), target) == pytest.approx(2 * np.sin(0.5), abs=1e-14)


def test_sup_error_is_generic_over_approximants():
    target = Target(omega=1.0, n=0)
    zero = lambda x: np.zeros_like(np.asarray(x, dtype=complex))
    assert sup_error(zero, target, grid_size=100) == pytest.approx(1.0, abs=1e-14)
    np.testing.assert_allclose(error_curve(zero, target)(np.array([0.3])), [1.0])


def test_sup_error_needs_enough_samples():
    with pytest.raises(ValueError):
        sup_error(UnitaryRational.one(2), Target(omega=1.0, n=2), grid_size=5)


def test_real_coefficients_give_conjugate_symmetry():
    r = UnitaryRational([1.0, -0.45, 0.07])
    x = RNG.uniform(0, 1, 40)
    np.testing.assert_allclose(r(-x), np.conj(r(x)), atol=1e-15)


def test_derivative_of_p():
    r = UnitaryRational(COEFFS)
    z = 1j * RNG.uniform(-1, 1, 10)
    np.testing.assert_allclose(r.dp(z), COEFFS[1] + 2 * COEFFS[2] * z, rtol=1e-14)
    np.testing.assert_array_equal(UnitaryRational.one(0).dp(z), 0)


def test_phase_derivative_matches_central_differences():
    r = UnitaryRational(COEFFS)
    target = Target(omega=1.3, n=2)
    xs = np.linspace(-0.9, 0.9, 7)
    h = 1e-6
    slope = (phase_error_values(r, target, xs + h) - phase_error_values(r, target, xs - h)) / (2 * h)
    np.testing.assert_allclose(phase_derivative(r, target.omega, xs), slope, atol=1e-7)
