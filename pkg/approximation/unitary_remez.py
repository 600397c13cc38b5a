"""
Unitary Best Approximation
Interval-rebalancing iteration driving the phase error to equioscillation
"""

import json
import numpy as np
from typing import Optional, Tuple
from dataclasses import dataclass, field, replace
from loguru import logger
from scipy.linalg import svd
from scipy.optimize import brentq

from approximation.errors import (
    BranchJump,
    FrequencyOutOfRange,
    NotConverged,
    PoleOnAxis,
    PoleOnInterval,
    RankDeficient,
)
from approximation.sampling import chebyshev_nodes, refine_maximum
from approximation.unitary_core import (
    Target,
    UnitaryRational,
    normalize_coefficients,
    phase_derivative,
    unwrap_from,
    wrapped_phase_error,
)

RANK_RTOL = 1e-12
POLE_ATOL = 1e-10
NEAR_DEGENERATE = 0.995
SYMMETRY_ATOL = 1e-8
MIN_BETA = 0.05
ROOT_XTOL = 1e-15
# extreme phases carry absolute rounding of a few hundred eps
PHASE_NOISE = 256 * np.finfo(float).eps
DENSE_SCAN = 4

# iterates rejected by these are retried from the previous nodes with smaller beta
_RECOVERABLE = (BranchJump, PoleOnAxis, PoleOnInterval, RankDeficient)


def noise_floor(alpha: float) -> float:
    """Smallest relative spread of extreme phases that rounding lets us resolve"""
    return PHASE_NOISE / alpha if alpha > 0 else np.inf


@dataclass(frozen=True, eq=False)
class PhaseCertificate:
    """Equioscillation evidence for a unitary best approximant"""
    target: Target
    approximant: UnitaryRational
    eta: np.ndarray            # 2n+2 extrema, eta[0] = -1, eta[-1] = 1
    nodes: np.ndarray          # 2n+1 interpolation nodes
    alpha: float               # phase amplitude
    error_u: float             # 2 sin(alpha/2)
    deviation: float           # (max - min)/max over extreme |phase error|
    extreme_phases: np.ndarray = field(default_factory=lambda: np.array([]))
    iterations: int = 0
    flags: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        """JSON document with the certificate schema"""
        return {
            'n': self.target.n,
            'omega': self.target.omega,
            'coeffs_re': self.approximant.coeffs.real.tolist(),
            'coeffs_im': self.approximant.coeffs.imag.tolist(),
            'eta': self.eta.tolist(),
            'nodes': self.nodes.tolist(),
            'alpha': self.alpha,
            'error_u': self.error_u,
            'deviation': self.deviation,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _interpolation_matrix(omega: float, nodes: np.ndarray, n: int) -> np.ndarray:
    """
    Real (2n+1) x (2n+2) matrix of Im(exp(i*omega*x_j/2) p(ix_j)) = 0.

    Columns hold Re a_0..Re a_n, then Im a_0..Im a_n.
    """
    c = np.exp(0.5j * omega * nodes)[:, None] * (1j * nodes[:, None]) ** np.arange(n + 1)
    return np.hstack([c.imag, c.real])


def _check_poles(r: UnitaryRational):
    for pole in r.poles():
        if abs(pole.real) <= POLE_ATOL * max(1.0, abs(pole)) and abs(pole.imag) <= 1 + POLE_ATOL:
            raise PoleOnInterval(complex(pole))


def interpolate_unitary(target: Target, nodes) -> UnitaryRational:
    """
    Unitary r = p^dag/p with r(ix_j) = exp(i*omega*x_j) at 2n+1 nodes.

    r(ix_j) = conj(p(ix_j))/p(ix_j) equals exp(i*omega*x_j) exactly when
    exp(i*omega*x_j/2) p(ix_j) is real, which is linear and homogeneous in the
    real and imaginary parts of the coefficients. p spans the null space.

    Args:
        target: Frequency and degree
        nodes: 2n+1 strictly increasing reals in (-1, 1)

    Returns:
        Gauge-normalized UnitaryRational

    Raises:
        RankDeficient: if the null space is not one-dimensional
        PoleOnInterval: if p vanishes on i[-1, 1]
    """
    n = target.n
    x = np.asarray(nodes, dtype=float)
    if x.shape != (2 * n + 1,):
        raise ValueError(f"need {2 * n + 1} nodes for degree {n}, got {x.size}")
    if np.any(np.diff(x) <= 0):
        raise ValueError("nodes must be strictly increasing")
    if target.omega == 0:
        return UnitaryRational.one(n)

    A = _interpolation_matrix(target.omega, x, n)
    _, s, vh = svd(A, full_matrices=True)
    ratio = s[-1] / s[0]
    if ratio < RANK_RTOL:
        raise RankDeficient(float(ratio))
    v = vh[-1]
    r = UnitaryRational(normalize_coefficients(v[:n + 1] + 1j * v[n + 1:]))
    _check_poles(r)
    return r


def _local_phase(r: UnitaryRational, omega: float, reference: float):
    """Phase error near a point whose continuous value is known"""
    rotate = np.exp(-1j * reference)

    def phase(xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        return reference + np.angle(r(xs) * np.exp(-1j * omega * xs) * rotate)
    return phase


def _extremum_in(r: UnitaryRational, omega: float, a: float, b: float) -> Optional[float]:
    """Root of the phase derivative on [a, b], or None without a sign change"""
    def slope(t: float) -> float:
        return float(phase_derivative(r, omega, np.array([t]))[0])

    fa, fb = slope(a), slope(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if np.sign(fa) == np.sign(fb):
        return None
    return float(brentq(slope, a, b, xtol=ROOT_XTOL, rtol=4 * np.finfo(float).eps))


def _locate_extrema(r: UnitaryRational, omega: float, nodes: np.ndarray,
                    scan_points: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Largest |phase error| in each of the 2n+2 node subintervals.

    Interior extrema are roots of the analytic phase derivative; the bounded
    search on |phase| is the fallback when the scan bracket shows no sign change.

    Returns:
        (eta, signed phase error at eta)

    Raises:
        BranchJump: the scan is too coarse to follow the phase
    """
    bounds = np.concatenate(([-1.0], nodes, [1.0]))
    last = len(bounds) - 2
    eta = np.empty(last + 1)
    phases = np.empty(last + 1)
    for j in range(last + 1):
        a, b = bounds[j], bounds[j + 1]
        xs = np.linspace(a, b, scan_points)
        # phase error vanishes (mod 2pi) at the nodes; anchor there
        anchor = scan_points - 1 if j == 0 else 0
        phi = unwrap_from(wrapped_phase_error(r, omega, xs), anchor, xs)
        k = int(np.argmax(np.abs(phi)))
        if (j == 0 and k == 0) or (j == last and k == scan_points - 1):
            eta[j], phases[j] = xs[k], phi[k]
            continue
        k = min(max(k, 1), scan_points - 2)
        local = _local_phase(r, omega, phi[k])
        x_star = _extremum_in(r, omega, xs[k - 1], xs[k + 1])
        if x_star is None:
            x_star, _ = refine_maximum(lambda t: np.abs(local(t)), xs[k - 1], xs[k + 1],
                                       float(xs[k]))
        eta[j], phases[j] = x_star, float(local(np.array([x_star]))[0])
    return eta, phases


def _rebalance(nodes: np.ndarray, maxima: np.ndarray, beta: float) -> np.ndarray:
    """Shrink subintervals with large error, grow those with small error"""
    lengths = np.diff(np.concatenate(([-1.0], nodes, [1.0])))
    maxima = np.maximum(maxima, np.finfo(float).tiny)
    lengths = lengths * (maxima / np.mean(maxima)) ** (-beta)
    lengths *= 2.0 / np.sum(lengths)
    return -1.0 + np.cumsum(lengths)[:-1]


def _flags(target: Target, nodes: np.ndarray, eta: np.ndarray) -> Tuple[str, ...]:
    flags = []
    if target.omega >= NEAR_DEGENERATE * (target.n + 1) * np.pi:
        flags.append('near_degenerate')
        logger.warning(f"n={target.n}, omega={target.omega}: near-degenerate frequency, "
                       f"alpha close to pi")
    asymmetry = max(np.max(np.abs(nodes + nodes[::-1])), np.max(np.abs(eta + eta[::-1])))
    if asymmetry > SYMMETRY_ATOL:
        flags.append('asymmetric')
        logger.warning(f"n={target.n}, omega={target.omega}: nodes/extrema asymmetric "
                       f"by {asymmetry:.2e}")
    return tuple(flags)


def _certificate(target: Target, r: UnitaryRational, nodes: np.ndarray,
                 eta: np.ndarray, phases: np.ndarray, iterations: int) -> PhaseCertificate:
    magnitudes = np.abs(phases)
    alpha = float(np.mean(magnitudes))
    deviation = float((magnitudes.max() - magnitudes.min()) / magnitudes.max())
    return PhaseCertificate(
        target=target,
        approximant=r,
        eta=eta.copy(),
        nodes=nodes.copy(),
        alpha=alpha,
        error_u=2.0 * np.sin(alpha / 2.0),
        deviation=deviation,
        extreme_phases=phases.copy(),
        iterations=iterations,
    )


def check_frequency(target: Target):
    """Raise FrequencyOutOfRange unless 0 < omega < (n+1)pi"""
    if target.omega <= 0 or target.degenerate:
        raise FrequencyOutOfRange(target.n, target.omega)


def _iterate(target: Target, nodes: np.ndarray,
             scan_points: int) -> Tuple[UnitaryRational, np.ndarray, np.ndarray]:
    """Interpolate at nodes and locate the extrema, rescanning densely on a branch jump"""
    r = interpolate_unitary(target, nodes)
    try:
        eta, phases = _locate_extrema(r, target.omega, nodes, scan_points)
    except BranchJump as e:
        logger.debug(f"{e}; rescanning with {DENSE_SCAN * scan_points} points")
        eta, phases = _locate_extrema(r, target.omega, nodes, DENSE_SCAN * scan_points)
    return r, eta, phases


def solve(target: Target,
          tol: float = 1e-10,
          max_iter: int = 200,
          beta: float = 0.5,
          scan_points: int = 200,
          initial_nodes: Optional[np.ndarray] = None) -> PhaseCertificate:
    """
    Compute the unitary best approximant and its equioscillation certificate.

    Starts from Chebyshev nodes, interpolates, locates the 2n+2 phase-error
    extrema between nodes and rescales each subinterval by
    (m_j/mean m)^(-beta) until the extreme magnitudes agree to tol.

    When alpha is so small that rounding in the phase exceeds tol * alpha, the
    iteration stops at noise_floor(alpha) instead and the certificate carries a
    'noise_limited' flag. An iterate that hits a pole, a branch jump or a
    singular interpolation system is discarded and the step from the previous
    nodes is retried with half the exponent.

    Args:
        target: Frequency in (0, (n+1)pi) and degree
        tol: Relative spread of extreme phase magnitudes, in [1e-13, 1e-2]
        max_iter: Iteration budget
        beta: Rebalancing exponent (halved whenever the spread grows)
        scan_points: Samples per subinterval before root finding
        initial_nodes: Optional 2n+1 starting nodes

    Returns:
        PhaseCertificate with deviation <= max(tol, noise_floor(alpha))

    Raises:
        FrequencyOutOfRange: omega = 0 or omega >= (n+1)pi
        NotConverged: budget exhausted; carries the best certificate
    """
    check_frequency(target)
    if not 1e-13 <= tol <= 1e-2:
        raise ValueError(f"tol must lie in [1e-13, 1e-2], got {tol}")
    if max_iter < 1:
        raise ValueError("max_iter must be positive")

    nodes = (chebyshev_nodes(2 * target.n + 1) if initial_nodes is None
             else np.asarray(initial_nodes, dtype=float))
    best: Optional[PhaseCertificate] = None
    previous = np.inf
    accepted: Optional[Tuple[np.ndarray, np.ndarray]] = None
    cert: Optional[PhaseCertificate] = None

    for iteration in range(1, max_iter + 1):
        try:
            r, eta, phases = _iterate(target, nodes, scan_points)
        except _RECOVERABLE as e:
            if accepted is None:
                raise
            beta /= 2.0
            logger.debug(f"unitary n={target.n} omega={target.omega} iter={iteration}: "
                         f"{e}; retrying with beta={beta:.3g}")
            nodes = _rebalance(*accepted, beta)
            continue

        cert = _certificate(target, r, nodes, eta, phases, iteration)
        logger.debug(f"unitary n={target.n} omega={target.omega} iter={iteration} "
                     f"alpha={cert.alpha:.15g} deviation={cert.deviation:.3e}")

        if best is None or cert.deviation < best.deviation:
            best = cert
        if cert.deviation <= max(tol, noise_floor(cert.alpha)):
            break
        if cert.deviation > previous and beta > MIN_BETA:
            beta = max(beta / 2.0, MIN_BETA)
            logger.debug(f"deviation grew, damping beta to {beta}")
        elif cert.deviation < previous and beta < MIN_BETA:
            beta = min(2.0 * beta, MIN_BETA)
        previous = cert.deviation
        accepted = (nodes, np.abs(phases))
        nodes = _rebalance(nodes, np.abs(phases), beta)
    else:
        raise NotConverged(max_iter, best)

    flags = _flags(target, cert.nodes, cert.eta)
    if cert.deviation > tol:
        flags += ('noise_limited',)
        logger.info(f"unitary n={target.n} omega={target.omega}: deviation "
                    f"{cert.deviation:.2e} is at the rounding floor for alpha={cert.alpha:.3e}")
    cert = replace(cert, flags=flags)
    logger.info(f"unitary n={target.n} omega={target.omega}: E^u={cert.error_u:.15g} "
                f"after {cert.iterations} iterations")
    return cert
