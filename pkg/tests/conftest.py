import sys
from pathlib import Path

import pytest

# run against the sources without installing
ROOT_DIR = Path(__file__).resolve().parent.parent
sys.path.insert(1, str(ROOT_DIR))

from MultiAdjointFCA.io_tools import loadDocument

DATA_DIR = ROOT_DIR / "MultiAdjointFCA" / "data"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long running property-based suites")


@pytest.fixture(scope="session")
def dataDir():
    return DATA_DIR


@pytest.fixture(scope="session")
def sigmaPath():
    return str(DATA_DIR / "running_context_sigma.json")


@pytest.fixture(scope="session")
def sigmaPrimePath():
    return str(DATA_DIR / "running_context_sigma_prime.json")


@pytest.fixture(scope="session")
def ninePath():
    return str(DATA_DIR / "nine_element_lattice.json")


@pytest.fixture(scope="session")
def sigma(sigmaPath):
    """ The running context with Łukasiewicz only at (a1, b2). """
    return loadDocument(sigmaPath)


@pytest.fixture(scope="session")
def sigmaPrime(sigmaPrimePath):
    """ The running context with Łukasiewicz at (a1, b2) and (a3, b3). """
    return loadDocument(sigmaPrimePath)


@pytest.fixture(scope="session")
def nine(ninePath):
    return loadDocument(ninePath)
