import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


@pytest.fixture(scope="session")
def xxx8_spectrum():
    from bellforge.thermal import diagonalize, xxx_ring

    lat = xxx_ring(8, 1.0, 0.5, "pauli")
    return lat, diagonalize(lat)


@pytest.fixture(scope="session")
def ising12_spectrum():
    from bellforge.thermal import diagonalize, ising_ring

    lat = ising_ring(12, +1, 2.0)
    return lat, diagonalize(lat)


@pytest.fixture(scope="session")
def blbq0_spectrum():
    from bellforge.thermal import blbq_ring6, diagonalize

    lat = blbq_ring6(0.0)
    return lat, diagonalize(lat)


@pytest.fixture(scope="session")
def generated_three_party():
    from bellforge.bell.generate import generate_tight_functionals

    return generate_tight_functionals(3)
