import json

import numpy as np
import pytest
from scipy.optimize import minimize, minimize_scalar

import approximation.unitary_remez as unitary_remez
from approximation.errors import BranchJump, FrequencyOutOfRange, NotConverged
from approximation.sampling import chebyshev_nodes
from approximation.unitary_core import Target, sup_error
from approximation.unitary_remez import interpolate_unitary, noise_floor, solve


def _two_parameter_oracle(omega: float) -> float:
    """E^u for n = 1 by brute force over r(ix) = (1 + isx)/(1 - isx)"""
    x = np.linspace(-1, 1, 2001)
    f = np.exp(1j * omega * x)

    def error(s: float) -> float:
        return float(np.max(np.abs((1 + 1j * s * x) / (1 - 1j * s * x) - f)))

    res = minimize_scalar(error, bounds=(0.0, 1.5), method='bounded', options={'xatol': 1e-12})
    return res.fun


def _gauge_fixed_oracle(omega: float) -> float:
    """E^u for n = 1 by brute force over p(z) = 1 + (b + ic)z, r = p^dag/p"""
    x = np.linspace(-1, 1, 2001)
    f = np.exp(1j * omega * x)

    def error(params: np.ndarray) -> float:
        p = 1 + (params[0] + 1j * params[1]) * 1j * x
        return float(np.max(np.abs(np.conj(p) / p - f)))

    starts = [np.array([b, c]) for b in np.linspace(-1.5, 0.0, 16) for c in (-0.2, 0.0, 0.2)]
    start = min(starts, key=error)
    res = minimize(error, start, method='Nelder-Mead',
                   options={'xatol': 1e-12, 'fatol': 1e-15, 'maxiter': 4000})
    return float(res.fun)


class TestInterpolation:
    def test_interpolates_at_nodes(self):
        target = Target(omega=2.0, n=2)
        nodes = chebyshev_nodes(5)
        r = interpolate_unitary(target, nodes)
        np.testing.assert_allclose(r(nodes), target(nodes), atol=1e-12)

    def test_gauge_is_normalized(self):
        r = interpolate_unitary(Target(omega=1.5, n=1), chebyshev_nodes(3))
        assert np.max(np.abs(r.coeffs)) == pytest.approx(1.0)
        assert r.coeffs[0].real > 0

    def test_zero_frequency_gives_one(self):
        r = interpolate_unitary(Target(omega=0.0, n=2), chebyshev_nodes(5))
        np.testing.assert_array_equal(r(np.linspace(-1, 1, 7)), 1.0)

    def test_needs_2n_plus_1_nodes(self):
        with pytest.raises(ValueError):
            interpolate_unitary(Target(omega=1.0, n=2), chebyshev_nodes(4))

    def test_nodes_must_increase(self):
        with pytest.raises(ValueError):
            interpolate_unitary(Target(omega=1.0, n=1), [0.5, 0.0, -0.5])


class TestSolveDegreeOne:
    def test_error_in_expected_range(self, certificate_n1):
        assert 0.017 <= certificate_n1.error_u <= 0.024
        assert certificate_n1.deviation <= 1e-10

    def test_matches_brute_force(self, certificate_n1):
        assert certificate_n1.error_u == pytest.approx(_two_parameter_oracle(1.0), abs=1e-6)

    def test_error_matches_sampled_sup(self, certificate_n1, target_n1):
        assert sup_error(certificate_n1.approximant, target_n1, grid_size=4000) == \
            pytest.approx(certificate_n1.error_u, rel=1e-8)

    def test_alpha_relation(self, certificate_n1):
        assert 0 < certificate_n1.alpha < np.pi
        assert certificate_n1.error_u == pytest.approx(2 * np.sin(certificate_n1.alpha / 2), rel=1e-15)


def test_extrema_interlace_nodes(certificate_n2):
    cert = certificate_n2
    n = cert.target.n
    assert cert.eta.shape == (2 * n + 2,)
    assert cert.nodes.shape == (2 * n + 1,)
    assert cert.eta[0] == -1.0 and cert.eta[-1] == 1.0
    merged = np.empty(4 * n + 3)
    merged[0::2] = cert.eta
    merged[1::2] = cert.nodes
    assert np.all(np.diff(merged) > 0)


def test_phase_error_alternates(certificate_n2):
    signs = np.sign(certificate_n2.extreme_phases)
    assert np.all(signs[1:] == -signs[:-1])
    np.testing.assert_allclose(np.abs(certificate_n2.extreme_phases), certificate_n2.alpha,
                               rtol=1e-9)


def test_best_approximant_is_symmetric(certificate_n2):
    np.testing.assert_allclose(certificate_n2.nodes, -certificate_n2.nodes[::-1], atol=1e-8)
    np.testing.assert_allclose(certificate_n2.eta, -certificate_n2.eta[::-1], atol=1e-8)
    assert 'asymmetric' not in certificate_n2.flags


@pytest.mark.parametrize("omega", [0.5, 1.0, 2.0])
def test_matches_gauge_fixed_brute_force(omega):
    cert = solve(Target(omega=omega, n=1))
    assert cert.error_u == pytest.approx(_gauge_fixed_oracle(omega), abs=1e-6)


def test_value_at_origin_is_one(certificate_n1, certificate_n2):
    for cert in (certificate_n1, certificate_n2):
        assert abs(cert.approximant(np.array([0.0]))[0] - 1.0) <= 1e-10


def test_conjugate_symmetry_on_the_axis(certificate_n2):
    x = np.linspace(0, 1, 101)
    r = certificate_n2.approximant
    np.testing.assert_allclose(r(-x), np.conj(r(x)), atol=1e-13)


def test_unitary_on_fine_grid(certificate_n2):
    x = np.linspace(-1, 1, 1001)
    assert np.max(np.abs(np.abs(certificate_n2.approximant(x)) - 1)) <= 1e-13


def test_interpolation_residuals_vanish(certificate_n2):
    cert = certificate_n2
    assert np.max(np.abs(cert.approximant(cert.nodes) - cert.target(cert.nodes))) <= 1e-10


@pytest.mark.parametrize("n, omega", [(1, 5.0762), (1, 5.3738), (1, 5.969), (2, 8.9535)])
def test_large_phase_amplitude_converges(n, omega):
    cert = solve(Target(omega=omega, n=n), tol=1e-8, max_iter=400)
    assert cert.deviation <= 1e-8
    signs = np.sign(cert.extreme_phases)
    assert np.all(signs[1:] == -signs[:-1])


def test_rejected_iterate_is_retried_with_smaller_step(monkeypatch):
    locate = unitary_remez._locate_extrema
    calls = {'count': 0}

    def flaky(r, omega, nodes, scan_points):
        calls['count'] += 1
        if calls['count'] in (3, 4):
            raise BranchJump(0.1, 3.0)
        return locate(r, omega, nodes, scan_points)

    monkeypatch.setattr(unitary_remez, '_locate_extrema', flaky)
    cert = solve(Target(omega=2.0, n=2))
    assert cert.deviation <= 1e-10
    assert calls['count'] > 4


def test_first_iterate_failure_propagates(monkeypatch):
    def broken(r, omega, nodes, scan_points):
        raise BranchJump(0.0, 3.0)

    monkeypatch.setattr(unitary_remez, '_locate_extrema', broken)
    with pytest.raises(BranchJump):
        solve(Target(omega=1.0, n=1))


def test_noise_floor_scales_inversely_with_alpha():
    assert noise_floor(1e-6) == pytest.approx(100 * noise_floor(1e-4))
    assert noise_floor(0.0) == np.inf


@pytest.mark.parametrize("n, omega", [(4, 3.0), (5, 5.0)])
def test_small_amplitude_stops_at_rounding_floor(n, omega):
    cert = solve(Target(omega=omega, n=n))
    assert cert.deviation <= max(1e-10, noise_floor(cert.alpha))
    if cert.deviation > 1e-10:
        assert 'noise_limited' in cert.flags


def test_best_approximant_has_no_poles_on_interval(certificate_n2):
    poles = certificate_n2.approximant.poles()
    assert np.all(np.abs(poles.real) > 1e-10)


@pytest.mark.parametrize("omega", [0.3, 1.0, 2.5])
def test_degree_zero_closed_form(omega):
    cert = solve(Target(omega=omega, n=0))
    assert cert.error_u == pytest.approx(2 * np.sin(omega / 2), abs=1e-12)


def test_zero_frequency_is_exact():
    with pytest.raises(FrequencyOutOfRange, match="exact"):
        solve(Target(omega=0.0, n=1))


def test_degenerate_frequency_is_out_of_range():
    with pytest.raises(FrequencyOutOfRange, match="degenerate"):
        solve(Target(omega=2 * np.pi, n=1))


def test_budget_exhaustion_carries_best_certificate():
    with pytest.raises(NotConverged) as info:
        solve(Target(omega=1.0, n=1), max_iter=1)
    assert info.value.best is not None
    assert info.value.best.iterations == 1


def test_tolerance_range_is_enforced():
    with pytest.raises(ValueError):
        solve(Target(omega=1.0, n=1), tol=1e-16)


def test_near_degenerate_frequency_is_flagged():
    cert = solve(Target(omega=0.997 * np.pi, n=0))
    assert 'near_degenerate' in cert.flags


def test_certificate_document(certificate_n1):
    doc = json.loads(certificate_n1.to_json())
    assert set(doc) == {'n', 'omega', 'coeffs_re', 'coeffs_im', 'eta', 'nodes',
                        'alpha', 'error_u', 'deviation'}
    assert doc['n'] == 1 and doc['omega'] == 1.0
    assert len(doc['coeffs_re']) == 2 and len(doc['eta']) == 4
