import pytest

from src.config import Config
from src.engine import BFunctionEngine


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exact oracle solves that take several seconds")


@pytest.fixture
def engine():
    return BFunctionEngine(Config())
