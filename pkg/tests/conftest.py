import pytest

from lrstretch import make_partition

ACCEPTANCE_LINES = []


@pytest.fixture
def worked_example():
    """(nu, lam, mu) of the worked example, k = 3."""
    return tuple(make_partition(p, 3) for p in ([4, 3, 1], [2, 1, 0], [3, 2, 0]))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
