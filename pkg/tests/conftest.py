import pytest

from hodgespec.complex_core import Complex, closure, open_in_closure, subset

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def interval():
    return closure([[1, 2]])


@pytest.fixture
def circle():
    return closure([[1, 2], [2, 3], [3, 4], [4, 1]])


@pytest.fixture
def triangle():
    return closure([[1, 2, 3]])


@pytest.fixture
def open_arc(circle):
    return subset(circle, [[3], [4], [2, 3], [3, 4], [1, 4]], kind="open")


@pytest.fixture
def disjoint_open():
    return open_in_closure([[0], [1], [2], [3, 4], [5, 6, 7, 8], [9, 10, 11, 12]])


@pytest.fixture
def octahedron():
    # K_{2,2,2}: 0-1, 2-3, 4-5 are the non-adjacent pairs
    from hodgespec.complex_core import whitney_complex
    pairs = {(0, 1), (2, 3), (4, 5)}
    edges = [(i, j) for i in range(6) for j in range(i + 1, 6) if (i, j) not in pairs]
    return whitney_complex((range(6), edges))
