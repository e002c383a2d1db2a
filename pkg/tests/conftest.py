import pytest
from hypothesis import HealthCheck, settings

from coalqt import group_coalgebra, matrix_coalgebra, matrix_over, trivial_coalgebra

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# Filled by tests/test_acceptance.py, printed once at the end of the session.
ACCEPTANCE_LINES: dict = {}


@pytest.fixture(scope="session")
def k():
    return trivial_coalgebra()


@pytest.fixture(scope="session")
def g2():
    return group_coalgebra(2)


@pytest.fixture(scope="session")
def m2():
    return matrix_coalgebra(2)


@pytest.fixture(scope="session")
def m2g2():
    return matrix_over(2, group_coalgebra(2))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
