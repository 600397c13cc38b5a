"""
Chebyshev Minimax Approximation
AAA-Lawson computation of the complex rational Chebyshev approximant
"""

import json
import numpy as np
from typing import List, Optional, Sequence, Set, Tuple
from dataclasses import dataclass
from loguru import logger
from numpy.polynomial import polynomial as P
from scipy.linalg import eigvals, svd
from scipy.optimize import minimize

from approximation.errors import ApproximationError, NotConverged
from approximation.sampling import chebyshev_grid, chebyshev_nodes, local_maxima, refined_maxima
from approximation.unitary_core import Target
from approximation.unitary_remez import PhaseCertificate, solve

EXACT_RTOL = 1e-14
FROISSART_ATOL = 1e-12
FLATNESS_TOL = 1e-3
STAGNATION_WINDOW = 50
STAGNATION_TOL = 1e-4
LAWSON_FLAT_EXIT = 1e-8
SYMMETRY_ATOL = 1e-6
POLISH_ROUNDS = 4
EXCHANGE_ROUNDS = 25
EXCHANGE_RTOL = 1e-13
SEED_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class BarycentricRational:
    """
    r(z) = sum_j w_j v_j/(z - z_j) / sum_j w_j/(z - z_j)

    Support points z_j lie on i[-1, 1]; m support points give a rational
    function of type (m-1, m-1).
    """
    support: np.ndarray
    values: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        arrays = [np.array(a, dtype=complex).ravel()
                  for a in (self.support, self.values, self.weights)]
        support, values, weights = arrays
        if support.size == 0 or not (support.size == values.size == weights.size):
            raise ValueError("support, values and weights must be nonempty and of equal length")
        if np.unique(support).size != support.size:
            raise ValueError("support points must be pairwise distinct")
        if not np.any(weights != 0):
            raise ValueError("weights must not all vanish")
        if not (np.all(np.isfinite(values)) and np.all(np.isfinite(weights))):
            raise ValueError("values and weights must be finite")
        for name, a in zip(('support', 'values', 'weights'), arrays):
            a.setflags(write=False)
            object.__setattr__(self, name, a)

    @classmethod
    def from_coefficients(cls, support, alpha, beta) -> 'BarycentricRational':
        """Build from numerator weights alpha and denominator weights beta"""
        alpha = np.asarray(alpha, dtype=complex)
        beta = np.asarray(beta, dtype=complex)
        with np.errstate(divide='ignore', invalid='ignore'):
            values = alpha / beta
        return cls(support, values, beta)

    @classmethod
    def from_polynomials(cls, numerator, denominator, support) -> 'BarycentricRational':
        """
        Barycentric form of N/D on the given support points.

        N and D are monomial coefficients in z of degree below len(support);
        with l(z) = prod (z - z_j) the weights are D(z_j)/l'(z_j).
        """
        support = np.asarray(support, dtype=complex)
        diffs = support[:, None] - support[None, :]
        np.fill_diagonal(diffs, 1.0)
        d = P.polyval(support, np.asarray(denominator, dtype=complex))
        with np.errstate(divide='ignore', invalid='ignore'):
            values = P.polyval(support, np.asarray(numerator, dtype=complex)) / d
        return cls(support, values, d / np.prod(diffs, axis=1))

    @classmethod
    def zero(cls) -> 'BarycentricRational':
        """r identically 0"""
        return cls(np.array([0j]), np.array([0j]), np.array([1 + 0j]))

    @property
    def degree(self) -> int:
        return self.support.size - 1

    def evaluate_z(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        zv = np.ravel(z)
        with np.errstate(divide='ignore', invalid='ignore'):
            C = 1.0 / np.subtract.outer(zv, self.support)
            r = (C @ (self.weights * self.values)) / (C @ self.weights)
        hit_rows, hit_cols = np.nonzero(zv[:, None] == self.support[None, :])
        r[hit_rows] = self.values[hit_cols]
        return r.reshape(z.shape)

    def __call__(self, x) -> np.ndarray:
        """r(ix) for real x"""
        return self.evaluate_z(1j * np.asarray(x, dtype=float))

    def _arrowhead_eigs(self, top: np.ndarray) -> np.ndarray:
        m = self.support.size
        B = np.eye(m + 1, dtype=complex)
        B[0, 0] = 0
        E = np.zeros((m + 1, m + 1), dtype=complex)
        E[0, 1:] = top
        E[1:, 0] = 1
        np.fill_diagonal(E[1:, 1:], self.support)
        lam = eigvals(E, B)
        return lam[np.isfinite(lam)]

    def poles(self) -> np.ndarray:
        return self._arrowhead_eigs(self.weights)

    def zeros(self) -> np.ndarray:
        return self._arrowhead_eigs(self.weights * self.values)

    def to_dict(self) -> dict:
        return {
            'support_re': self.support.real.tolist(),
            'support_im': self.support.imag.tolist(),
            'values_re': self.values.real.tolist(),
            'values_im': self.values.imag.tolist(),
            'weights_re': self.weights.real.tolist(),
            'weights_im': self.weights.imag.tolist(),
        }


@dataclass(frozen=True, eq=False)
class MinimaxResult:
    """Chebyshev approximant with its error diagnostics"""
    target: Target
    approximant: BarycentricRational
    error_c: float
    grid: np.ndarray
    error_curve: np.ndarray
    lawson_iters: int
    converged: bool
    flatness: float
    flags: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            'n': self.target.n,
            'omega': self.target.omega,
            **self.approximant.to_dict(),
            'error_c': self.error_c,
            'flatness': self.flatness,
            'lawson_iters': self.lawson_iters,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _flatness(maxima_values: Sequence[float], n: int) -> float:
    """Relative spread of the 2n+2 largest local maxima"""
    top = np.sort(np.asarray(maxima_values, dtype=float))[::-1][:2 * n + 2]
    if top.size == 0 or top[0] <= 0:
        return 0.0
    return float((top[0] - top[-1]) / top[0])


def _has_froissart_doublet(r: BarycentricRational) -> bool:
    poles = r.poles()
    if poles.size == 0:
        return False
    gaps = np.abs(poles[:, None] - r.support[None, :])
    return bool(np.any(gaps < FROISSART_ATOL))


def _aaa(Z: np.ndarray, F: np.ndarray, m_max: int) -> Tuple[List[int], np.ndarray, Set[str]]:
    """
    Greedy AAA up to m_max support points.

    Returns:
        (support indices into Z, barycentric weights, flags)
    """
    M = Z.size
    free = np.ones(M, dtype=bool)
    banned = np.zeros(M, dtype=bool)
    R = np.full(M, np.mean(F))
    scale = np.max(np.abs(F))
    support: List[int] = []
    weights = np.ones(1, dtype=complex)
    flags: Set[str] = set()
    retried = False

    while len(support) < m_max:
        err = np.abs(F - R)
        err[~free | banned] = -1.0
        j = int(np.argmax(err))
        support.append(j)
        free[j] = False

        C = 1.0 / (Z[free][:, None] - Z[support][None, :])
        A = (F[free][:, None] - F[support][None, :]) * C
        _, _, vh = svd(A, full_matrices=False)
        w = vh[-1].conj()

        if not retried and _has_froissart_doublet(BarycentricRational(Z[support], F[support], w)):
            logger.warning(f"Froissart doublet at support point z={Z[j]}; pruning and retrying")
            flags.add('froissart_pruned')
            support.pop()
            free[j] = True
            banned[j] = True
            retried = True
            continue

        weights = w
        R = F.copy()
        with np.errstate(divide='ignore', invalid='ignore'):
            R[free] = (C @ (w * F[support])) / (C @ w)
        if np.max(np.abs(F[free] - R[free])) <= EXACT_RTOL * scale and len(support) < m_max:
            flags.add('degree_unreachable')
            logger.warning(f"target resolved exactly with {len(support)} support points "
                           f"(degree {len(support) - 1} < {m_max - 1})")
            break

    return support, weights, flags


def _grid_errors(Z: np.ndarray, F: np.ndarray, support: List[int],
                 alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """Pointwise errors on the whole grid for numerator/denominator weights"""
    free = np.ones(Z.size, dtype=bool)
    free[support] = False
    C = 1.0 / (Z[free][:, None] - Z[support][None, :])
    errors = np.empty(Z.size)
    with np.errstate(divide='ignore', invalid='ignore'):
        errors[free] = np.abs(F[free] - (C @ alpha) / (C @ beta))
        errors[support] = np.abs(F[support] - alpha / beta)
    return errors


def _lawson(Z: np.ndarray, F: np.ndarray, support: List[int], n: int,
            iters: int) -> Tuple[Optional[Tuple[np.ndarray, np.ndarray]], int]:
    """
    Lawson iteratively reweighted linearized least squares.

    Returns:
        ((alpha, beta) of the iterate with the smallest grid error, iterations run)
    """
    m = len(support)
    free = np.ones(Z.size, dtype=bool)
    free[support] = False
    C = 1.0 / (Z[free][:, None] - Z[support][None, :])
    L = np.hstack([F[free][:, None] * C, -C])
    w = np.full(L.shape[0], 1.0 / L.shape[0])

    best, best_err = None, np.inf
    history: List[float] = []
    done = 0
    for done in range(1, iters + 1):
        _, _, vh = svd(np.sqrt(w)[:, None] * L, full_matrices=False)
        v = vh[-1].conj()
        beta, alpha = v[:m], v[m:]
        errors = _grid_errors(Z, F, support, alpha, beta)
        if not np.all(np.isfinite(errors)):
            logger.debug(f"Lawson iterate {done} has a pole on the grid; stopping")
            break
        emax = float(np.max(errors))
        if emax < best_err:
            best, best_err = (alpha, beta), emax

        history.append(_flatness(errors[local_maxima(errors)], n))
        if history[-1] <= LAWSON_FLAT_EXIT:
            logger.debug(f"Lawson error curve level at iteration {done}")
            break
        if done > STAGNATION_WINDOW and \
                history[-STAGNATION_WINDOW - 1] - history[-1] < STAGNATION_TOL:
            logger.debug(f"Lawson stagnated at iteration {done}, flatness {history[-1]:.3e}")
            break

        w = w * errors[free]
        total = np.sum(w)
        if total <= 0 or not np.isfinite(total):
            break
        w /= total
    return best, done


def _polish(target: Target, x: np.ndarray, zs: np.ndarray, alpha: np.ndarray,
            beta: np.ndarray, active: np.ndarray) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """
    Minimize t subject to |r(ix_k) - exp(i*omega*x_k)| <= t on active points and ||beta|| = 1.
    """
    m = zs.size
    keep = np.min(np.abs(1j * active[:, None] - zs[None, :]), axis=1) > 1e-13
    pts = active[keep]
    if pts.size == 0:
        return None
    C = 1.0 / (1j * pts[:, None] - zs[None, :])
    f = target(pts)

    def unpack(z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return z[:m] + 1j * z[m:2 * m], z[2 * m:3 * m] + 1j * z[3 * m:4 * m]

    def parts(z: np.ndarray):
        a, b = unpack(z)
        D = C @ b
        r = (C @ a) / D
        return f - r, r, D

    def cons(z: np.ndarray) -> np.ndarray:
        e, _, _ = parts(z)
        return z[-1] - np.abs(e)

    def cons_jac(z: np.ndarray) -> np.ndarray:
        e, r, D = parts(z)
        dr_da = C / D[:, None]
        dr_db = -r[:, None] * dr_da
        # d|e| = Re(conj(e) de)/|e| with de = -dr
        u = np.conj(e)[:, None] / np.maximum(np.abs(e), 1e-300)[:, None]
        jac = np.empty((pts.size, 4 * m + 1))
        jac[:, :m] = np.real(u * dr_da)
        jac[:, m:2 * m] = np.real(u * 1j * dr_da)
        jac[:, 2 * m:3 * m] = np.real(u * dr_db)
        jac[:, 3 * m:4 * m] = np.real(u * 1j * dr_db)
        jac[:, -1] = 1.0
        return jac

    def norm(z: np.ndarray) -> float:
        return float(np.sum(z[2 * m:4 * m] ** 2) - 1.0)

    def norm_jac(z: np.ndarray) -> np.ndarray:
        g = np.zeros_like(z)
        g[2 * m:4 * m] = 2.0 * z[2 * m:4 * m]
        return g

    objective_grad = np.zeros(4 * m + 1)
    objective_grad[-1] = 1.0
    s = np.linalg.norm(beta)
    a0, b0 = alpha / s, beta / s
    z0 = np.concatenate([a0.real, a0.imag, b0.real, b0.imag, [0.0]])
    with np.errstate(divide='ignore', invalid='ignore'):
        z0[-1] = float(np.max(np.abs(parts(z0)[0])))
    if not np.isfinite(z0[-1]):
        return None

    res = minimize(lambda z: z[-1], z0, jac=lambda z: objective_grad, method='SLSQP',
                   constraints=[{'type': 'ineq', 'fun': cons, 'jac': cons_jac},
                                {'type': 'eq', 'fun': norm, 'jac': norm_jac}],
                   options={'maxiter': 200, 'ftol': 1e-16})
    if not np.all(np.isfinite(res.x)):
        return None
    return unpack(res.x)


def _unitary_seed(target: Target, seed: Optional[PhaseCertificate]
                  ) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """
    Real coefficients (N, D) of cos(alpha) r^u, whose error is sin(alpha) < E^u
    for alpha <= pi/2.

    r^u = p^dag/p has real p for the symmetric best approximant, so N and D
    are real and the error curve of N/D is even.
    """
    if seed is None:
        if target.omega == 0 or target.degenerate:
            return None
        try:
            seed = solve(target, tol=SEED_TOL)
        except NotConverged as e:
            seed = e.best
        except ApproximationError as e:
            logger.debug(f"no unitary seed for n={target.n} omega={target.omega}: {e}")
            return None
        if seed is None:
            return None
    p = seed.approximant.coeffs.real
    signs = (-1.0) ** np.arange(p.size)
    scale = np.linalg.norm(p)
    return np.cos(seed.alpha) * signs * p / scale, p / scale


def _real_rational(target: Target, num: np.ndarray, den: np.ndarray):
    """x -> |N(ix)/D(ix) - exp(i omega x)|"""
    def curve(xs: np.ndarray) -> np.ndarray:
        z = 1j * np.asarray(xs, dtype=float)
        return np.abs(P.polyval(z, num) / P.polyval(z, den) - target(xs))
    return curve


def _level(target: Target, pts: np.ndarray, num: np.ndarray, den: np.ndarray,
           t0: float) -> Optional[Tuple[np.ndarray, np.ndarray, float]]:
    """
    Minimize t subject to |N(ix_k)/D(ix_k) - exp(i*omega*x_k)| <= t on pts, ||D|| = 1.

    N and D are real, so only x_k >= 0 are needed. t is carried as t/t0.

    Returns:
        (N, D, t) or None if SLSQP leaves the finite range
    """
    m = num.size
    V = (1j * pts[:, None]) ** np.arange(m)
    f = target(pts)

    def parts(v: np.ndarray):
        Dv = V @ v[m:2 * m]
        r = (V @ v[:m]) / Dv
        return f - r, r, Dv

    def cons(v: np.ndarray) -> np.ndarray:
        e, _, _ = parts(v)
        return v[-1] - np.abs(e) / t0

    def cons_jac(v: np.ndarray) -> np.ndarray:
        e, r, Dv = parts(v)
        u = np.conj(e) / np.maximum(np.abs(e), 1e-300)
        dr_dn = V / Dv[:, None]
        jac = np.empty((pts.size, 2 * m + 1))
        jac[:, :m] = np.real(u[:, None] * dr_dn) / t0
        jac[:, m:2 * m] = -np.real(u[:, None] * r[:, None] * dr_dn) / t0
        jac[:, -1] = 1.0
        return jac

    def norm(v: np.ndarray) -> float:
        return float(np.sum(v[m:2 * m] ** 2) - 1.0)

    def norm_jac(v: np.ndarray) -> np.ndarray:
        g = np.zeros_like(v)
        g[m:2 * m] = 2.0 * v[m:2 * m]
        return g

    objective_grad = np.zeros(2 * m + 1)
    objective_grad[-1] = 1.0
    v0 = np.concatenate([num, den, [1.0]])
    v0[-1] = float(np.max(np.abs(parts(v0)[0]))) / t0
    res = minimize(lambda v: v[-1], v0, jac=lambda v: objective_grad, method='SLSQP',
                   constraints=[{'type': 'ineq', 'fun': cons, 'jac': cons_jac},
                                {'type': 'eq', 'fun': norm, 'jac': norm_jac}],
                   options={'maxiter': 500, 'ftol': 1e-15})
    if not np.all(np.isfinite(res.x)):
        return None
    return res.x[:m], res.x[m:2 * m], float(res.x[-1]) * t0


def _exchange(target: Target, x: np.ndarray, num: np.ndarray,
              den: np.ndarray) -> Tuple[np.ndarray, np.ndarray, float]:
    """
    Discrete minimax over a growing point set.

    Each round solves the leveled problem on the current points, then adds the
    refined maxima of the new error curve. The loop ends once the refined sup
    meets the discrete level, or after two rounds without improvement.

    Returns:
        (N, D, refined sup error) of the best iterate
    """
    half = x[x >= 0]

    def assess(a: np.ndarray, b: np.ndarray):
        curve = _real_rational(target, a, b)
        with np.errstate(divide='ignore', invalid='ignore'):
            values = curve(half)
            if not np.all(np.isfinite(values)):
                return np.inf, values, []
            maxima = refined_maxima(curve, half, values)
        return max(max(v for _, v in maxima), float(np.max(values))), values, maxima

    best_error, values, maxima = assess(num, den)
    best = (num, den)
    if not np.isfinite(best_error) or best_error == 0:
        return num, den, best_error
    pts = np.union1d(half[values >= 0.5 * best_error], [p for p, _ in maxima])

    stalls = 0
    for round_ in range(1, EXCHANGE_ROUNDS + 1):
        try:
            leveled = _level(target, pts, *best, t0=best_error)
        except (ValueError, np.linalg.LinAlgError) as e:
            logger.debug(f"exchange round {round_} failed: {e}")
            break
        if leveled is None:
            break
        a, b, level = leveled
        error, _, maxima = assess(a, b)
        logger.debug(f"exchange round {round_}: level={level:.17g} sup={error:.17g}")
        if error < best_error:
            best, best_error = (a, b), error
            stalls = 0
            if error - level <= EXCHANGE_RTOL * error:
                break
        else:
            stalls += 1
            if stalls >= 2:
                break
        pts = np.union1d(pts, [p for p, _ in maxima])
    return best[0], best[1], best_error


def _candidate(support: np.ndarray, alpha: np.ndarray,
               beta: np.ndarray) -> Optional[BarycentricRational]:
    try:
        return BarycentricRational.from_coefficients(support, alpha, beta)
    except ValueError:
        return None


def _assess(r: BarycentricRational, target: Target,
            x: np.ndarray) -> Tuple[float, np.ndarray, List[Tuple[float, float]]]:
    """Refined sup error, grid error curve and refined local maxima"""
    def curve(xs: np.ndarray) -> np.ndarray:
        return np.abs(r(xs) - target(xs))
    with np.errstate(divide='ignore', invalid='ignore'):
        values = curve(x)
        if not np.all(np.isfinite(values)):
            return np.inf, values, []
        maxima = refined_maxima(curve, x, values)
    error = max(max(v for _, v in maxima), float(np.max(values)))
    return error, values, maxima


def solve_chebyshev(target: Target,
                    grid_size: int = 2000,
                    lawson_iters: int = 1000,
                    polish: bool = True,
                    seed: Optional[PhaseCertificate] = None) -> MinimaxResult:
    """
    Complex rational Chebyshev approximant to exp(omega z) on z in i[-1, 1].

    AAA picks n+1 support points greedily on a Chebyshev grid and Lawson
    reweighting moves towards the minimax solution. The polish runs an
    exchange on real-coefficient N/D started from cos(alpha) r^u, and an SLSQP
    pass on the active set of the AAA-Lawson candidate when that one is ahead.
    r = 0 is kept whenever it is at least as good.

    Args:
        target: Frequency and degree
        grid_size: Working grid size, at least max(1000, 20(2n+2))
        lawson_iters: Maximum Lawson iterations
        polish: Run the extremal polish after Lawson
        seed: Unitary certificate to start the exchange from; solved for when omitted

    Returns:
        MinimaxResult
    """
    n = target.n
    if grid_size < max(1000, 20 * (2 * n + 2)):
        raise ValueError(f"grid_size must be >= {max(1000, 20 * (2 * n + 2))}, got {grid_size}")
    if lawson_iters < 0:
        raise ValueError("lawson_iters must be nonnegative")

    x = chebyshev_grid(grid_size)
    Z = 1j * x
    F = target(x)
    support, weights, flags = _aaa(Z, F, n + 1)
    zs = Z[support]

    candidates = [_candidate(zs, weights * F[support], weights)]
    iterations = 0
    exact = bool(np.max(_grid_errors(Z, F, support, weights * F[support], weights))
                 <= EXACT_RTOL * np.max(np.abs(F)))

    if not exact and lawson_iters > 0:
        lawson_best, iterations = _lawson(Z, F, support, n, lawson_iters)
        if lawson_best is not None:
            candidates.append(_candidate(zs, *lawson_best))

    zero = BarycentricRational.zero()
    scored_zero = (zero, *_assess(zero, target, x))
    scored = [(r, *_assess(r, target, x)) for r in candidates if r is not None]
    best = min(scored, key=lambda item: item[1]) if scored else scored_zero

    leveled = None
    if polish and not exact:
        start = _unitary_seed(target, seed)
        if start is not None:
            num, den, _ = _exchange(target, x, *start)
            try:
                r = BarycentricRational.from_polynomials(num, den, 1j * chebyshev_nodes(n + 1))
            except ValueError as e:
                logger.debug(f"exchange result not representable: {e}")
            else:
                leveled = (r, *_assess(r, target, x))

    if polish and not exact and scored and (leveled is None or best[1] < leveled[1]):
        for _ in range(POLISH_ROUNDS):
            r, error, values, maxima = best
            active = np.union1d(x[values >= 0.5 * error], [p for p, _ in maxima])
            try:
                polished = _polish(target, x, zs, r.weights * r.values, r.weights, active)
            except (ValueError, np.linalg.LinAlgError) as e:
                logger.debug(f"polish failed: {e}")
                break
            candidate = None if polished is None else _candidate(zs, *polished)
            if candidate is None:
                break
            scored_candidate = (candidate, *_assess(candidate, target, x))
            if scored_candidate[1] >= error:
                break
            best = scored_candidate

    if leveled is not None and leveled[1] <= best[1]:
        best = leveled
    if scored_zero[1] <= best[1]:
        best = scored_zero

    r, error, values, maxima = best
    flatness = 0.0 if exact else _flatness([v for _, v in maxima], n)
    converged = flatness <= FLATNESS_TOL
    if not converged:
        logger.warning(f"chebyshev n={n} omega={target.omega}: flatness {flatness:.2e} "
                       f"above {FLATNESS_TOL}")
    elif np.max(np.abs(values - values[::-1])) > SYMMETRY_ATOL:
        flags.add('asymmetric')
        logger.warning(f"chebyshev n={n} omega={target.omega}: error curve not symmetric")

    logger.info(f"chebyshev n={n} omega={target.omega}: E^c={error:.15g} "
                f"flatness={flatness:.2e} lawson_iters={iterations}")
    return MinimaxResult(
        target=target,
        approximant=r,
        error_c=float(error),
        grid=x,
        error_curve=values,
        lawson_iters=iterations,
        converged=converged,
        flatness=flatness,
        flags=tuple(sorted(flags)),
    )


@dataclass(frozen=True)
class MonotonicityReport:
    """Outcome of the E^c monotonicity check over an omega grid"""
    n: int
    omegas: Tuple[float, ...]
    errors: Tuple[float, ...]
    passed: bool
    first_violation: Optional[int] = None


def error_monotonicity_check(n: int, omegas: Sequence[float], atol: float = 1e-8,
                             **solve_kwargs) -> MonotonicityReport:
    """
    Check that E^c is nondecreasing in omega.

    Violations are reported, not raised; first_violation is the index k with
    E^c(omega_k) > E^c(omega_{k+1}) + atol.
    """
    omegas = tuple(float(w) for w in omegas)
    if any(b < a for a, b in zip(omegas, omegas[1:])):
        raise ValueError("omega grid must be nondecreasing")
    errors = tuple(solve_chebyshev(Target(omega=w, n=n), **solve_kwargs).error_c for w in omegas)
    first = next((k for k in range(len(errors) - 1) if errors[k] > errors[k + 1] + atol), None)
    if first is not None:
        logger.warning(f"E^c decreases between omega={omegas[first]} and {omegas[first + 1]}")
    return MonotonicityReport(n=n, omegas=omegas, errors=errors,
                              passed=first is None, first_violation=first)
