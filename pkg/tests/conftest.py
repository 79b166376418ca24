import pytest

import parapy


@pytest.fixture(autouse=True)
def global_state():
    capacity = parapy.capacity
    parapy.set_random_state(42)
    yield
    parapy.set_capacity(capacity)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exact checks at the full degree bounds (deselect with -m 'not slow')")
