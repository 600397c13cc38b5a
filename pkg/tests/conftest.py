"""
Shared fixtures: solved approximants reused across test modules
"""

import pytest

from approximation.cheb_minimax import solve_chebyshev
from approximation.unitary_core import Target
from approximation.unitary_remez import solve


@pytest.fixture(scope="session")
def target_n1():
    return Target(omega=1.0, n=1)


@pytest.fixture(scope="session")
def certificate_n1(target_n1):
    return solve(target_n1)


@pytest.fixture(scope="session")
def minimax_n1(target_n1):
    return solve_chebyshev(target_n1)


@pytest.fixture(scope="session")
def certificate_n2():
    return solve(Target(omega=2.0, n=2))
