"""
Approximation Errors
Exception hierarchy shared by the solvers and the bounds checks
"""

from typing import Any, Optional


class ApproximationError(Exception):
    """Base class for all approximation failures"""


class PoleOnAxis(ApproximationError):
    """p(ix) vanished (numerically) at an evaluation point"""

    def __init__(self, x: float, modulus: float):
        self.x = x
        self.modulus = modulus
        super().__init__(f"p(ix) vanishes at x={x!r} (|p|={modulus:.3e})")


class BranchJump(ApproximationError):
    """Adjacent phase samples differ by more than pi/2"""

    def __init__(self, x: float, jump: float):
        self.x = x
        self.jump = jump
        super().__init__(
            f"phase jumps by {jump:.3f} rad near x={x!r}; refine the grid"
        )


class RankDeficient(ApproximationError):
    """Interpolation conditions do not determine p up to scaling"""

    def __init__(self, ratio: float):
        self.ratio = ratio
        super().__init__(
            f"interpolation matrix has a degenerate null space "
            f"(sigma_2n+1/sigma_1={ratio:.3e})"
        )


class PoleOnInterval(ApproximationError):
    """The interpolant has a pole on i[-1, 1]"""

    def __init__(self, pole: complex):
        self.pole = pole
        super().__init__(f"interpolant has a pole at z={pole!r} on i[-1,1]")


class FrequencyOutOfRange(ApproximationError):
    """omega outside (0, (n+1)pi): no equioscillating phase error exists"""

    def __init__(self, n: int, omega: float):
        self.n = n
        self.omega = omega
        if omega == 0:
            message = "exact: r ≡ 1"
        else:
            message = (
                f"degenerate: omega={omega!r} >= (n+1)pi for n={n}, "
                f"every unitary r attains E^u = 2"
            )
        super().__init__(message)


class NotConverged(ApproximationError):
    """Iteration budget exhausted before reaching the tolerance"""

    def __init__(self, max_iter: int, best: Optional[Any] = None):
        self.max_iter = max_iter
        self.best = best
        deviation = getattr(best, "deviation", float("nan"))
        super().__init__(
            f"not converged after {max_iter} iterations "
            f"(best deviation {deviation:.3e})"
        )


class CriterionMismatch(ApproximationError):
    """Re gamma(eta_j) disagrees with cos(alpha) - 1 or is not negative"""

    def __init__(self, deviation: float, max_re_gamma: float):
        self.deviation = deviation
        self.max_re_gamma = max_re_gamma
        super().__init__(
            f"Kolmogorov check failed: |Re gamma - (cos a - 1)| = {deviation:.3e}, "
            f"max Re gamma = {max_re_gamma:.3e}"
        )


class InvalidInterlacing(ApproximationError):
    """Extrema and nodes of a lower-bound setting do not interlace"""


class FrequencyTooSmall(ApproximationError):
    """Degenerate branch requested for omega < (n+1)pi"""

    def __init__(self, n: int, omega: float):
        self.n = n
        self.omega = omega
        super().__init__(
            f"omega={omega!r} < (n+1)pi for n={n}; use the solvers instead"
        )


class ConstantOverflow(ApproximationError, OverflowError):
    """Asymptotic constant not representable as a double"""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"c_n underflows double precision for n={n}")
