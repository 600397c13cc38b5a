import numpy as np
import pytest

from approximation.sampling import (
    chebyshev_grid,
    chebyshev_nodes,
    local_maxima,
    refine_maximum,
    refined_sup,
)


def test_chebyshev_grid_is_sorted_symmetric_with_endpoints():
    x = chebyshev_grid(101)
    assert x[0] == -1.0 and x[-1] == 1.0
    assert np.all(np.diff(x) > 0)
    np.testing.assert_array_equal(x, -x[::-1])
    assert x[50] == 0.0


def test_chebyshev_grid_rejects_single_point():
    with pytest.raises(ValueError):
        chebyshev_grid(1)


def test_chebyshev_nodes_are_interior_roots():
    x = chebyshev_nodes(5)
    assert np.all(np.abs(x) < 1)
    np.testing.assert_allclose(np.cos(5 * np.arccos(x)), 0.0, atol=1e-12)


def test_local_maxima_includes_endpoints_and_plateau_right_end():
    values = np.array([3.0, 1.0, 2.0, 2.0, 0.5, 4.0])
    assert local_maxima(values).tolist() == [0, 3, 5]


def test_refine_maximum_finds_interior_peak():
    x, v = refine_maximum(lambda t: 1.0 - (t - 0.3) ** 2, 0.0, 1.0, 0.25)
    assert x == pytest.approx(0.3, abs=1e-8)
    assert v == pytest.approx(1.0, abs=1e-14)


def test_refined_sup_beats_grid_maximum():
    xs = np.linspace(-1, 1, 11)
    func = lambda t: np.cos(7 * t)
    _, value = refined_sup(func, xs)
    assert value == pytest.approx(1.0, abs=1e-12)
    assert value >= np.max(func(xs))
