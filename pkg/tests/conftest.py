import pytest

from hubstate.graph import Graph, edgeless_graph, ring_graph, star_graph

_ACCEPTANCE_LINES = []


@pytest.fixture
def star7():
    return star_graph(7)


@pytest.fixture
def ring3():
    return ring_graph(3)


@pytest.fixture
def ring4():
    return ring_graph(4)


@pytest.fixture
def ring6():
    return ring_graph(6)


@pytest.fixture
def isolated():
    """Path 1-2 plus an isolated vertex 3."""
    return Graph.from_edges(3, [(1, 2)])


@pytest.fixture
def edgeless3():
    return edgeless_graph(3)


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
