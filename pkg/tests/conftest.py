import numpy as np
import pytest

from entlap import corpus


@pytest.fixture(scope="session")
def psi():
    return corpus.build("psi")


@pytest.fixture(scope="session")
def rho1():
    return corpus.build("rho1")


@pytest.fixture(scope="session")
def rho2():
    return corpus.build("rho2")


@pytest.fixture(scope="session")
def rho3():
    return corpus.build("rho3")


@pytest.fixture(scope="session")
def rho5():
    return corpus.build("rho5")


@pytest.fixture()
def rng():
    return np.random.default_rng(20250809)
