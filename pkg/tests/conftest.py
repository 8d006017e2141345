from fractions import Fraction

import pytest

from dualsomos.dualnum import dual
from dualsomos.somos import SomosOrbit, SomosParams, extend_orbit

# The four independent shadow rows of the classical orbit, indices -1..12.
TABLE_ROWS = {
    "i": [1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209, 83313, 620297],
    "ii": [-1, 0, 1, 2, 6, 12, 35, 138, 413, 2512, 13761, 82090, 916443, 7443564],
    "iii": [0, 0, 1, 1, 3, 7, 15, 70, 202, 1107, 6906, 36386, 420371, 3594979],
    "iv": [0, 0, 0, 1, 1, 3, 10, 22, 108, 472, 2174, 17792, 120536, 1161627],
}

TABLE_INDICES = range(-1, 13)


def table_row(name):
    return dict(zip(TABLE_INDICES, map(Fraction, TABLE_ROWS[name])))


@pytest.fixture(scope="session")
def classical_params():
    return SomosParams(dual(1), dual(1))


@pytest.fixture(scope="session")
def classical(classical_params):
    orbit = SomosOrbit.from_seed(classical_params, [dual(1)] * 4, base=-1)
    return extend_orbit(orbit, -4, 18)


@pytest.fixture(scope="session")
def beta_dual_orbit():
    """Seed of ones with beta = 1 + eps: the first worked dual example."""
    params = SomosParams(dual(1), dual(1, 1))
    orbit = SomosOrbit.from_seed(params, [dual(1)] * 4, base=-1)
    return extend_orbit(orbit, -2, 12)


@pytest.fixture(scope="session")
def alpha_dual_orbit():
    """Seed of ones with alpha = 1 + eps: the second worked dual example."""
    params = SomosParams(dual(1, 1), dual(1))
    orbit = SomosOrbit.from_seed(params, [dual(1)] * 4, base=-1)
    return extend_orbit(orbit, -2, 12)
