"""
Sampling Utilities
Chebyshev grids and golden-section refinement of local maxima
"""

import numpy as np
from typing import Callable, List, Tuple
from scipy.optimize import minimize_scalar

# Vectorized real function of x, e.g. an error curve |r(ix) - exp(i w x)|
CurveFunction = Callable[[np.ndarray], np.ndarray]

REFINE_XTOL = 1e-12


def chebyshev_grid(m: int) -> np.ndarray:
    """
    Chebyshev points of the second kind on [-1, 1], endpoints included.

    Written as sin(pi*(2k-(m-1))/(2(m-1))) so the grid is exactly symmetric
    about 0 and sorted left to right.
    """
    if m < 2:
        raise ValueError(f"grid needs at least 2 points, got {m}")
    k = np.arange(m)
    return np.sin(np.pi * (2 * k - (m - 1)) / (2 * (m - 1)))


def chebyshev_nodes(m: int) -> np.ndarray:
    """Chebyshev points of the first kind: m points interior to (-1, 1)"""
    if m < 1:
        raise ValueError(f"need at least one node, got {m}")
    k = np.arange(1, m + 1)
    return np.sin(np.pi * (2 * k - m - 1) / (2 * m))


def local_maxima(values: np.ndarray) -> np.ndarray:
    """Indices of local maxima of a sampled curve, endpoints included"""
    v = np.asarray(values, dtype=float)
    if v.size == 1:
        return np.array([0])
    left = np.concatenate(([-np.inf], v[:-1]))
    right = np.concatenate((v[1:], [-np.inf]))
    # plateaus report their right end only
    return np.flatnonzero((v >= left) & (v > right))


def refine_maximum(func: CurveFunction, a: float, b: float,
                   x0: float) -> Tuple[float, float]:
    """
    Maximize func on [a, b] starting from the sample x0.

    Uses scipy's bounded scalar minimizer (golden section with parabolic
    steps) to REFINE_XTOL in x. Never returns a worse point than x0.

    Returns:
        (x, func(x))
    """
    def scalar(t: float) -> float:
        return float(func(np.array([t]))[0])

    best_x, best_v = x0, scalar(x0)
    if b - a <= REFINE_XTOL:
        return best_x, best_v

    res = minimize_scalar(lambda t: -scalar(t), bounds=(a, b), method='bounded',
                          options={'xatol': REFINE_XTOL})
    if res.success and -res.fun > best_v:
        best_x, best_v = float(res.x), float(-res.fun)
    return best_x, best_v


def refined_maxima(func: CurveFunction, xs: np.ndarray,
                   values: np.ndarray) -> List[Tuple[float, float]]:
    """
    Refine every local maximum of a sampled curve.

    Args:
        func: Vectorized curve
        xs: Sorted sample locations
        values: func(xs)

    Returns:
        List of (x, value) pairs sorted by x
    """
    maxima = []
    last = len(xs) - 1
    for k in local_maxima(values):
        if k == 0 or k == last:
            maxima.append((float(xs[k]), float(values[k])))
            continue
        maxima.append(refine_maximum(func, xs[k - 1], xs[k + 1], float(xs[k])))
    return maxima


def refined_sup(func: CurveFunction, xs: np.ndarray) -> Tuple[float, float]:
    """Grid-plus-refinement estimate of max func on [xs[0], xs[-1]]"""
    values = func(xs)
    maxima = refined_maxima(func, xs, values)
    x_star, v_star = max(maxima, key=lambda item: item[1])
    return x_star, max(v_star, float(np.max(values)))
