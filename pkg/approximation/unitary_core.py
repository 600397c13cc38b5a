"""
Unitary Core
Unitary rational functions r = p^dag / p evaluated on the imaginary axis
"""

import numpy as np
from typing import Callable, List, Union
from dataclasses import dataclass
from numpy.polynomial import polynomial as P

from approximation.errors import BranchJump, PoleOnAxis
from approximation.sampling import chebyshev_grid, refined_sup

ArrayLike = Union[float, np.ndarray]

# |p(ix)| below this fraction of sum_k |a_k||x|^k counts as a pole
_POLE_RTOL = 64 * np.finfo(float).eps
_UNDERFLOW = 1e-300


@dataclass(frozen=True)
class Target:
    """exp(i*omega*x) on [-1, 1] approximated at degree n"""
    omega: float
    n: int

    def __post_init__(self):
        if not np.isfinite(self.omega) or self.omega < 0:
            raise ValueError(f"omega must be finite and >= 0, got {self.omega!r}")
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"degree must be a nonnegative integer, got {self.n!r}")
        object.__setattr__(self, 'omega', float(self.omega))
        object.__setattr__(self, 'n', int(self.n))

    @property
    def degenerate(self) -> bool:
        """omega >= (n+1)pi: every unitary r attains error 2"""
        return bool(self.omega >= (self.n + 1) * np.pi)

    def __call__(self, x: ArrayLike) -> np.ndarray:
        return np.exp(1j * self.omega * np.asarray(x, dtype=float))


def dagger(coeffs) -> np.ndarray:
    """
    Coefficients of p^dag(z) = sum conj(a_j) (-z)^j.

    Satisfies p^dag(ix) = conj(p(ix)) for real x; an involution.
    """
    a = np.asarray(coeffs, dtype=complex)
    if a.size == 0:
        raise ValueError("coefficient vector is empty")
    signs = (-1.0) ** np.arange(a.size)
    return np.conj(a) * signs


def normalize_coefficients(coeffs) -> np.ndarray:
    """
    Scale p to unit max modulus with a reproducible sign.

    Only real factors leave r = p^dag/p unchanged (a unimodular c turns r into
    conj(c)/c * r), so the sign is fixed instead of the full phase: the first
    nonzero coefficient (a_0 when nonzero) gets a positive real part, or a
    positive imaginary part when its real part vanishes. For real-coefficient p,
    which is what the best approximant has, this makes p(0) real positive.
    """
    a = np.asarray(coeffs, dtype=complex)
    scale = np.max(np.abs(a))
    if scale == 0:
        raise ValueError("coefficient vector is zero")
    a = a / scale
    lead = a[np.flatnonzero(np.abs(a) > 0)[0]]
    key = lead.real if abs(lead.real) > 1e-15 else lead.imag
    return -a if key < 0 else a


@dataclass(frozen=True, eq=False)
class UnitaryRational:
    """r = p^dag/p with p given by monomial coefficients a_0..a_n in z"""
    coeffs: np.ndarray

    def __post_init__(self):
        a = np.array(self.coeffs, dtype=complex).ravel()
        if a.size == 0 or not np.any(a != 0):
            raise ValueError("p must have at least one nonzero coefficient")
        a.setflags(write=False)
        object.__setattr__(self, 'coeffs', a)

    @classmethod
    def one(cls, n: int = 0) -> 'UnitaryRational':
        """r identically 1, stored at degree n"""
        a = np.zeros(n + 1, dtype=complex)
        a[0] = 1.0
        return cls(a)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def p(self, z: ArrayLike) -> np.ndarray:
        return P.polyval(np.asarray(z), self.coeffs)

    def p_dagger(self, z: ArrayLike) -> np.ndarray:
        return P.polyval(np.asarray(z), dagger(self.coeffs))

    def dp(self, z: ArrayLike) -> np.ndarray:
        """p'(z)"""
        if self.coeffs.size == 1:
            return np.zeros_like(np.asarray(z), dtype=complex)
        return P.polyval(np.asarray(z), P.polyder(self.coeffs))

    def poles(self) -> np.ndarray:
        """Roots of p (the poles of r)"""
        a = np.trim_zeros(self.coeffs, 'b')
        if a.size <= 1:
            return np.array([], dtype=complex)
        return P.polyroots(a)

    def __call__(self, x: ArrayLike) -> np.ndarray:
        return evaluate(self, x)

    def to_dict(self) -> dict:
        return {
            'coeffs_re': self.coeffs.real.tolist(),
            'coeffs_im': self.coeffs.imag.tolist(),
        }


@dataclass(frozen=True)
class PhaseSample:
    """Phase error g(x) - omega*x and pointwise error at one point"""
    x: float
    phase_error: float
    pointwise_error: float


def evaluate(r: UnitaryRational, x: ArrayLike) -> np.ndarray:
    """
    Evaluate r(ix) = p^dag(ix)/p(ix) for real x.

    Raises:
        PoleOnAxis: if |p(ix)| is zero relative to the coefficient scale
    """
    xs = np.asarray(x, dtype=float)
    z = 1j * xs
    denom = r.p(z)
    scale = P.polyval(np.abs(xs), np.abs(r.coeffs))
    bad = np.abs(denom) <= np.maximum(_UNDERFLOW, _POLE_RTOL * scale)
    if np.any(bad):
        where = np.flatnonzero(np.atleast_1d(bad))[0]
        x_bad = float(np.atleast_1d(xs)[where])
        raise PoleOnAxis(x_bad, float(np.abs(np.atleast_1d(denom)[where])))
    # p^dag(ix) = conj(p(ix)) on the real axis
    return np.conj(denom) / denom


def wrapped_phase_error(r: UnitaryRational, omega: float, xs: np.ndarray) -> np.ndarray:
    """Principal value in (-pi, pi] of g(x) - omega*x"""
    xs = np.asarray(xs, dtype=float)
    return np.angle(evaluate(r, xs) * np.exp(-1j * omega * xs))


def phase_derivative(r: UnitaryRational, omega: float, xs: ArrayLike) -> np.ndarray:
    """
    d/dx of the phase error g(x) - omega*x.

    g(x) = -2 arg p(ix), and d/dx arg p(ix) = Re(p'(ix)/p(ix)), so no
    unwrapping is involved.
    """
    z = 1j * np.asarray(xs, dtype=float)
    return -2.0 * np.real(r.dp(z) / r.p(z)) - omega


def unwrap_from(wrapped: np.ndarray, anchor: int, xs: np.ndarray = None) -> np.ndarray:
    """
    Continuous phase by nearest-branch continuation from an anchor sample.

    The anchor keeps its principal value; every other sample takes the branch
    closest to its neighbour.

    Raises:
        BranchJump: if two neighbours differ by more than pi/2 on the nearest branch
    """
    w = np.asarray(wrapped, dtype=float)
    if w.size > 1:
        steps = np.diff(w)
        steps = (steps + np.pi) % (2 * np.pi) - np.pi
        k = int(np.argmax(np.abs(steps)))
        if abs(steps[k]) > np.pi / 2:
            where = float(xs[k]) if xs is not None else float(k)
            raise BranchJump(where, float(abs(steps[k])))
    phi = np.unwrap(w)
    shift = np.round((phi[anchor] - w[anchor]) / (2 * np.pi))
    return phi - 2 * np.pi * shift


def phase_error_values(r: UnitaryRational, target: Target, xs: np.ndarray) -> np.ndarray:
    """Unwrapped g(x) - omega*x on a sorted grid, anchored at the sample nearest 0"""
    xs = np.asarray(xs, dtype=float)
    if xs.ndim != 1 or xs.size == 0:
        raise ValueError("grid must be a nonempty 1-D array")
    if np.any(np.diff(xs) <= 0):
        raise ValueError("grid must be strictly increasing")
    if xs[0] < -1 or xs[-1] > 1:
        raise ValueError("grid must lie in [-1, 1]")
    wrapped = wrapped_phase_error(r, target.omega, xs)
    return unwrap_from(wrapped, int(np.argmin(np.abs(xs))), xs)


def phase_error(r: UnitaryRational, target: Target, xs) -> List[PhaseSample]:
    """
    Phase error samples of a unitary approximant.

    Args:
        r: Pole-free unitary rational function
        target: Frequency and degree
        xs: Sorted grid in [-1, 1]

    Returns:
        One PhaseSample per grid point
    """
    xs = np.asarray(xs, dtype=float)
    phi = phase_error_values(r, target, xs)
    pointwise = np.abs(evaluate(r, xs) - target(xs))
    return [
        PhaseSample(x=float(x), phase_error=float(f), pointwise_error=float(e))
        for x, f, e in zip(xs, phi, pointwise)
    ]


def error_curve(approximant: Callable[[np.ndarray], np.ndarray],
                target: Target) -> Callable[[np.ndarray], np.ndarray]:
    """x -> |approximant(x) - exp(i*omega*x)| for any approximant evaluated at ix"""
    def curve(xs: np.ndarray) -> np.ndarray:
        return np.abs(approximant(xs) - target(xs))
    return curve


def sup_error(approximant: Callable[[np.ndarray], np.ndarray],
              target: Target, grid_size: int = 2000) -> float:
    """
    Estimate max_{x in [-1,1]} |r(ix) - exp(i*omega*x)|.

    Samples a Chebyshev grid and refines every local maximum by bounded scalar
    search. The result is a lower bound on the true sup norm.

    Args:
        approximant: Callable mapping real x to r(ix)
        target: Frequency and degree
        grid_size: Number of samples, at least 2n+2

    Returns:
        Refined maximum error
    """
    if grid_size < max(2, 2 * target.n + 2):
        raise ValueError(f"grid_size must be >= 2n+2={2 * target.n + 2}, got {grid_size}")
    _, value = refined_sup(error_curve(approximant, target), chebyshev_grid(grid_size))
    return value
