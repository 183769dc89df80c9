import pytest

from helpers import Setup


@pytest.fixture
def s1():
    return Setup(2, 3, [(2, 3, 1)])


@pytest.fixture
def s2():
    return Setup(3, 2, [(2, 1)])


@pytest.fixture
def z2_n2():
    return Setup(2, 2)


def pytest_terminal_summary(terminalreporter):
    from helpers import CRITERIA_LINES

    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
