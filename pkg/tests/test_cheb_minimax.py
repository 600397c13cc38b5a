import json
import math
import time

import numpy as np
import pytest
from numpy.polynomial import polynomial as P

from approximation.cheb_minimax import (
    BarycentricRational,
    error_monotonicity_check,
    solve_chebyshev,
)
from approximation.sampling import chebyshev_nodes
from approximation.unitary_core import Target, sup_error
from approximation.unitary_remez import solve


class TestBarycentricRational:
    def test_interpolates_at_support_points(self):
        support = np.array([-0.5j, 0.5j])
        r = BarycentricRational(support, [1.0, 2.0], [1.0, -1.0])
        assert r(np.array([-0.5]))[0] == 1.0
        assert r(np.array([0.5]))[0] == 2.0

    def test_constant(self):
        r = BarycentricRational([0.3j], [2.0], [1.0])
        assert r.degree == 0
        np.testing.assert_allclose(r(np.linspace(-1, 1, 5)), 2.0)

    def test_zero(self):
        np.testing.assert_array_equal(BarycentricRational.zero()(np.linspace(-1, 1, 5)), 0.0)

    def test_rejects_repeated_support(self):
        with pytest.raises(ValueError):
            BarycentricRational([0.1j, 0.1j], [1.0, 2.0], [1.0, 1.0])

    def test_rejects_zero_weights(self):
        with pytest.raises(ValueError):
            BarycentricRational([0.1j, 0.2j], [1.0, 2.0], [0.0, 0.0])

    def test_pole_location(self):
        # denominator 2z/(z^2-1), numerator -2/(z^2-1): r = -1/z
        r = BarycentricRational([-1.0, 1.0], [1.0, -1.0], [1.0, 1.0])
        np.testing.assert_allclose(r(np.array([0.5])), [-1 / 0.5j])
        poles = r.poles()
        assert np.min(np.abs(poles)) < 1e-12


class TestSolveChebyshev:
    @pytest.mark.parametrize("omega", [0.3, 1.0, 1.5])
    def test_degree_zero_below_half_pi(self, omega):
        result = solve_chebyshev(Target(omega=omega, n=0))
        assert result.error_c == pytest.approx(np.sin(omega), abs=1e-6)

    @pytest.mark.parametrize("omega", [2.0, 3.0])
    def test_degree_zero_above_half_pi(self, omega):
        result = solve_chebyshev(Target(omega=omega, n=0))
        assert result.error_c == pytest.approx(1.0, abs=1e-6)

    def test_zero_frequency_is_exact(self):
        result = solve_chebyshev(Target(omega=0.0, n=2))
        assert result.error_c <= 1e-14
        assert result.converged
        assert 'degree_unreachable' in result.flags

    def test_degenerate_frequency_attains_one(self):
        result = solve_chebyshev(Target(omega=7.0, n=1))
        assert 1.0 - 1e-6 <= result.error_c <= 1.0 + 1e-10

    def test_degree_one(self, minimax_n1, certificate_n1):
        assert minimax_n1.converged
        assert minimax_n1.flatness <= 1e-3
        assert certificate_n1.error_u / 2 <= minimax_n1.error_c < certificate_n1.error_u

    def test_error_matches_independent_sampling(self, minimax_n1, target_n1):
        assert sup_error(minimax_n1.approximant, target_n1, grid_size=5000) == \
            pytest.approx(minimax_n1.error_c, rel=1e-6)

    def test_grid_independence(self):
        target = Target(omega=2.0, n=1)
        coarse = solve_chebyshev(target, grid_size=2000)
        fine = solve_chebyshev(target, grid_size=4000)
        assert fine.error_c == pytest.approx(coarse.error_c, rel=1e-6)

    def test_grid_size_floor(self):
        with pytest.raises(ValueError):
            solve_chebyshev(Target(omega=1.0, n=1), grid_size=500)

    def test_document(self, minimax_n1):
        doc = json.loads(minimax_n1.to_json())
        assert doc['n'] == 1 and doc['omega'] == 1.0
        for key in ('support_re', 'support_im', 'values_re', 'values_im',
                    'weights_re', 'weights_im', 'error_c', 'flatness', 'lawson_iters'):
            assert key in doc
        assert len(doc['support_re']) == 2


def test_error_grows_with_frequency():
    report = error_monotonicity_check(1, [0.5, 1.0, 2.0, 3.0])
    assert report.passed
    assert report.first_violation is None
    assert list(report.errors) == sorted(report.errors)


def test_monotonicity_needs_sorted_grid():
    with pytest.raises(ValueError):
        error_monotonicity_check(0, [1.0, 0.5])


def test_from_polynomials_reproduces_ratio():
    num, den = [0.9, -0.4, 0.1], [1.0, 0.45, 0.08]
    r = BarycentricRational.from_polynomials(num, den, 1j * chebyshev_nodes(3))
    x = np.linspace(-1, 1, 41)
    np.testing.assert_allclose(r(x), P.polyval(1j * x, num) / P.polyval(1j * x, den), rtol=1e-13)


@pytest.mark.parametrize("n, fraction", [(1, 0.1), (2, 0.25), (3, 0.5)])
def test_beats_scaled_unitary_approximant(n, fraction):
    target = Target(omega=fraction * (n + 1) * math.pi, n=n)
    cert = solve(target)
    result = solve_chebyshev(target, seed=cert)
    assert result.error_c <= math.sin(cert.alpha) + 1e-10 * cert.error_u
    assert result.error_c >= cert.error_u / 2


def test_error_curve_is_symmetric(minimax_n1):
    curve = minimax_n1.error_curve
    np.testing.assert_allclose(curve, curve[::-1], atol=1e-6)
    assert 'asymmetric' not in minimax_n1.flags


@pytest.mark.slow
def test_degree_zero_closed_forms_within_budget():
    start = time.perf_counter()
    for omega in np.linspace(0, math.pi, 102)[1:-1]:
        target = Target(omega=omega, n=0)
        assert solve(target).error_u == pytest.approx(2 * math.sin(omega / 2), abs=1e-8)
        expected = math.sin(omega) if omega <= math.pi / 2 else 1.0
        assert solve_chebyshev(target).error_c == pytest.approx(expected, abs=1e-6)
    assert time.perf_counter() - start < 30


@pytest.mark.slow
@pytest.mark.parametrize("n", [0, 1, 2])
def test_error_is_nondecreasing_in_frequency(n):
    omegas = np.linspace(0.05, 0.95, 20) * (n + 1) * math.pi
    report = error_monotonicity_check(n, omegas, atol=1e-8)
    assert report.passed, report
