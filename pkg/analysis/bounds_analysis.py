"""
Bounds Analysis
Closed forms, asymptotics, Kolmogorov test and the two-sided error inequality
"""

import math
import numpy as np
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple
from dataclasses import dataclass, field, asdict
from loguru import logger

from approximation.cheb_minimax import MinimaxResult, solve_chebyshev
from approximation.errors import (
    ConstantOverflow,
    CriterionMismatch,
    FrequencyTooSmall,
    InvalidInterlacing,
    NotConverged,
)
from approximation.unitary_core import Target
from approximation.unitary_remez import PhaseCertificate, solve

GAMMA_ATOL = 1e-8
LOWER_SLACK = 1e-8
UPPER_RTOL = 1e-8
UPPER_ATOL = 1e-10
ROUNDING_ATOL = 64 * np.finfo(float).eps


@dataclass(frozen=True)
class VPSetting:
    """
    Interpolating approximant of defect d with its error extrema.

    Requires 2n-d+1 nodes strictly interlaced by 2n-d+2 extrema in [-1, 1].
    """
    degree: int
    defect: int
    nodes: Tuple[float, ...]
    eta: Tuple[float, ...]
    extreme_errors: Tuple[float, ...]

    @property
    def epsilon(self) -> float:
        return min(self.extreme_errors)

    def validate(self):
        """Raise InvalidInterlacing unless the setting is well formed"""
        n, d = self.degree, self.defect
        if not 0 <= d <= n:
            raise InvalidInterlacing(f"defect {d} outside [0, {n}]")
        if len(self.nodes) != 2 * n - d + 1:
            raise InvalidInterlacing(f"expected {2 * n - d + 1} nodes, got {len(self.nodes)}")
        if len(self.eta) != 2 * n - d + 2 or len(self.extreme_errors) != len(self.eta):
            raise InvalidInterlacing(f"expected {2 * n - d + 2} extrema with errors")
        if any(e < 0 for e in self.extreme_errors):
            raise InvalidInterlacing("extreme errors must be nonnegative")
        merged = [self.eta[0]]
        for x, e in zip(self.nodes, self.eta[1:]):
            merged.extend([x, e])
        if merged[0] < -1 or merged[-1] > 1:
            raise InvalidInterlacing("extrema must lie in [-1, 1]")
        if any(b <= a for a, b in zip(merged, merged[1:])):
            raise InvalidInterlacing("extrema and nodes do not interlace strictly")


@dataclass(frozen=True)
class DegenerateResult:
    """E^c = 1 and E^u = 2 for omega >= (n+1)pi, with the lower-bound witness"""
    error_c: float
    error_u: float
    witness: VPSetting


@dataclass
class BoundsReport:
    """Per-(n, omega) comparison of E^u and E^c"""
    n: int
    omega: float
    error_u: float
    error_c: float
    lower_ok: bool
    upper_ok: bool
    asym_ratio_u: float
    asym_ratio_c: float
    kolmogorov_max_re_gamma: float = float('nan')
    degenerate: bool = False
    exact: bool = False
    resolution_limited: bool = False
    gap: float = float('nan')
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def ratio_c_over_u(self) -> float:
        return self.error_c / self.error_u if self.error_u > 0 else float('nan')

    def to_row(self) -> Dict[str, Any]:
        """CSV row in the published column order"""
        return {
            'n': self.n,
            'omega': self.omega,
            'error_u': self.error_u,
            'error_c': self.error_c,
            'ratio_c_over_u': self.ratio_c_over_u,
            'lower_ok': self.lower_ok,
            'upper_ok': self.upper_ok,
            'asym_ratio_u': self.asym_ratio_u,
            'asym_ratio_c': self.asym_ratio_c,
            'max_re_gamma': self.kolmogorov_max_re_gamma,
            'degenerate': self.degenerate,
        }

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['notes'] = list(self.notes)
        data['ratio_c_over_u'] = self.ratio_c_over_u
        return data


def closed_form_n0(omega: float) -> Tuple[float, float]:
    """
    (E^c, E^u) for degree 0.

    E^c = sin(omega) up to pi/2 and 1 beyond; E^u = 2 sin(omega/2) below pi and
    2 from pi on. Both vanish at omega = 0.
    """
    if omega < 0:
        raise ValueError(f"omega must be >= 0, got {omega}")
    if omega == 0:
        return 0.0, 0.0
    error_c = math.sin(omega) if omega <= math.pi / 2 else 1.0
    error_u = 2.0 * math.sin(omega / 2.0) if omega < math.pi else 2.0
    return error_c, error_u


def asymptotic_constant(n: int) -> Fraction:
    """c_n = 2^(-2n) (n!)^2 / ((2n)! (2n+1)!), exactly"""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    c = Fraction(math.factorial(n) ** 2,
                 4 ** n * math.factorial(2 * n) * math.factorial(2 * n + 1))
    if float(c) == 0.0:
        raise ConstantOverflow(n)
    return c


def asymptotic_error(n: int, omega: float) -> float:
    """Leading-order prediction c_n omega^(2n+1)"""
    return float(asymptotic_constant(n)) * omega ** (2 * n + 1)


def kolmogorov_gamma(cert: PhaseCertificate) -> np.ndarray:
    """
    gamma(eta_j) = exp(i omega eta_j) conj(r(i eta_j)) - 1 at the extrema.

    Re gamma(eta_j) = cos(alpha) - 1 < 0 at every extremum shows r^u violates
    the local Kolmogorov condition with the constant test polynomial, so it is
    not a local best approximation in R_n.

    With theta_j the phase error at eta_j, gamma = exp(-i theta_j) - 1, so the
    real part is formed as -2 sin^2(theta_j/2) and compared with
    -2 sin^2(alpha/2); cos(.) - 1 would cancel to zero once alpha < 1e-8.

    Raises:
        CriterionMismatch: values disagree with cos(alpha) - 1 or are not negative
    """
    theta = np.asarray(cert.extreme_phases, dtype=float)
    gamma = -2.0 * np.sin(theta / 2.0) ** 2 - 1j * np.sin(theta)
    expected = -2.0 * math.sin(cert.alpha / 2.0) ** 2
    deviation = float(np.max(np.abs(gamma.real - expected)))
    max_re = float(np.max(gamma.real))
    if deviation > GAMMA_ATOL or not max_re < 0:
        raise CriterionMismatch(deviation, max_re)
    return gamma


def scaled_unitary_gap(error_u: float) -> float:
    """
    E^u - sin(alpha): how far cos(alpha) r^u, whose error is sin(alpha), lies below E^u.

    Written as 4 sin(alpha/2) sin^2(alpha/4) to avoid cancellation; of order
    alpha^3/8 for small alpha.
    """
    if error_u <= 0:
        return 0.0
    alpha = 2.0 * math.asin(min(error_u / 2.0, 1.0))
    return 4.0 * math.sin(alpha / 2.0) * math.sin(alpha / 4.0) ** 2


def upper_margin(error_u: float) -> Tuple[float, bool]:
    """
    Margin m for the strict check E^c <= E^u - m, and whether it is resolution limited.

    The nominal margin is max(1e-8 E^u, 1e-10). Scaling r^u by cos(alpha)
    already beats E^u by scaled_unitary_gap, which is of order E^u^3, so for
    small E^u the margin is capped at half that gap. Where even the gap is
    below rounding, ROUNDING_ATOL of slack is granted.
    """
    nominal = max(UPPER_RTOL * error_u, UPPER_ATOL)
    half_gap = 0.5 * scaled_unitary_gap(error_u)
    if nominal <= half_gap:
        return nominal, False
    if half_gap > ROUNDING_ATOL:
        return half_gap, True
    return -ROUNDING_ATOL, True


def vp_lower_bound(setting: VPSetting) -> float:
    """Half the smallest extreme error: a lower bound on E^c for the same f and n"""
    setting.validate()
    return 0.5 * setting.epsilon


def vp_setting_from_certificate(cert: PhaseCertificate) -> VPSetting:
    """Defect-0 setting built from a solver certificate"""
    errors = np.abs(cert.approximant(cert.eta) - cert.target(cert.eta))
    return VPSetting(
        degree=cert.target.n,
        defect=0,
        nodes=tuple(float(x) for x in cert.nodes),
        eta=tuple(float(e) for e in cert.eta),
        extreme_errors=tuple(float(e) for e in errors),
    )


def degenerate_errors(n: int, omega: float) -> DegenerateResult:
    """
    Errors for omega >= (n+1)pi with the constant (-1)^n witness.

    The witness interpolates at x_j = (2(j-1)-n) pi/omega and has error 2 at
    eta_j = (2(j-1)-n-1) pi/omega, so E^c >= 1; r = 0 attains it.

    Raises:
        FrequencyTooSmall: omega < (n+1)pi
    """
    target = Target(omega=omega, n=n)
    if not target.degenerate:
        raise FrequencyTooSmall(n, omega)
    zeta = (-1.0) ** n
    eta = np.array([(2 * j - n - 1) * math.pi / omega for j in range(n + 2)])
    nodes = np.array([(2 * j - n) * math.pi / omega for j in range(n + 1)])
    errors = np.abs(zeta - target(eta))
    witness = VPSetting(
        degree=n,
        defect=n,
        nodes=tuple(nodes.tolist()),
        eta=tuple(eta.tolist()),
        extreme_errors=tuple(errors.tolist()),
    )
    witness.validate()
    return DegenerateResult(error_c=1.0, error_u=2.0, witness=witness)


def verify_bounds(n: int, omega: float, error_u: float, error_c: float,
                  certificate: Optional[PhaseCertificate] = None) -> BoundsReport:
    """
    Check E^u/2 <= E^c < E^u for one (n, omega).

    The strict upper inequality is tested with the margin from upper_margin;
    reports where that margin had to shrink are marked resolution_limited.

    Args:
        n: Degree
        omega: Frequency
        error_u: E^u from the unitary solver or the degenerate branch
        error_c: E^c from the Chebyshev solver or a closed form
        certificate: Optional certificate for the Kolmogorov column

    Returns:
        BoundsReport
    """
    target = Target(omega=omega, n=n)
    exact = omega == 0
    degenerate = target.degenerate
    notes = []

    resolution_limited = False
    if exact:
        lower_ok = upper_ok = error_u == 0 and error_c == 0
        notes.append('exact: r ≡ 1')
    else:
        lower_ok = error_u / 2.0 <= error_c + LOWER_SLACK * error_u
        margin, resolution_limited = upper_margin(error_u)
        upper_ok = error_c <= error_u - margin

    predicted = asymptotic_error(n, omega)
    with np.errstate(divide='ignore', invalid='ignore'):
        asym_u = error_u / predicted if predicted > 0 else float('nan')
        asym_c = error_c / predicted if predicted > 0 else float('nan')

    max_re_gamma = float('nan')
    if certificate is not None and not degenerate and not exact:
        try:
            max_re_gamma = float(np.max(kolmogorov_gamma(certificate).real))
        except CriterionMismatch as e:
            notes.append(str(e))
            logger.warning(f"n={n} omega={omega}: {e}")

    report = BoundsReport(
        n=n,
        omega=omega,
        error_u=error_u,
        error_c=error_c,
        lower_ok=bool(lower_ok),
        upper_ok=bool(upper_ok),
        asym_ratio_u=asym_u,
        asym_ratio_c=asym_c,
        kolmogorov_max_re_gamma=max_re_gamma,
        degenerate=degenerate,
        exact=exact,
        resolution_limited=resolution_limited,
        gap=error_c - error_u / 2.0,
        notes=tuple(notes),
    )
    if not (report.lower_ok and report.upper_ok):
        logger.warning(f"n={n} omega={omega}: inequality check failed "
                       f"(E^u={error_u:.17g}, E^c={error_c:.17g})")
    return report


def evaluate_bounds(n: int, omega: float,
                    tol: float = 1e-10,
                    max_iter: int = 200,
                    grid_size: int = 2000,
                    lawson_iters: int = 1000) -> BoundsReport:
    """
    Compute E^u and E^c for one (n, omega) and verify the inequality.

    omega = 0 uses the exact branch, omega >= (n+1)pi the degenerate branch;
    otherwise both solvers run. A NotConverged unitary solve falls back to its
    best certificate and is noted in the report.
    """
    target = Target(omega=omega, n=n)
    if omega == 0:
        return verify_bounds(n, omega, 0.0, 0.0)
    if target.degenerate:
        result = degenerate_errors(n, omega)
        return verify_bounds(n, omega, result.error_u, result.error_c)

    notes = []
    try:
        cert = solve(target, tol=tol, max_iter=max_iter)
    except NotConverged as e:
        if e.best is None:
            raise
        logger.warning(f"n={n} omega={omega}: {e}; using best certificate")
        cert = e.best
        notes.append(f"unitary not converged (deviation {cert.deviation:.2e})")
    notes.extend(cert.flags)

    minimax: MinimaxResult = solve_chebyshev(target, grid_size=grid_size,
                                             lawson_iters=lawson_iters, seed=cert)
    notes.extend(minimax.flags)
    if not minimax.converged:
        notes.append(f"lawson flatness {minimax.flatness:.2e}")

    report = verify_bounds(n, omega, cert.error_u, minimax.error_c, certificate=cert)
    report.notes = report.notes + tuple(notes)
    return report
