import pytest

from coalitions import build_graph, generate


@pytest.fixture
def house():
    # C_5 plus the chord (1, 4): the classic house shape
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4)])


@pytest.fixture
def paw():
    # triangle with a pendant hanging off vertex 0
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@pytest.fixture
def two_k2():
    return build_graph(4, [(0, 1), (2, 3)])


def small_connected(n_max=5):
    """Every connected labeled graph of order 1..n_max (helper, not a fixture)."""
    from coalitions import enumerate_labeled_graphs

    for n in range(1, n_max + 1):
        yield from enumerate_labeled_graphs(n, connected_only=True)


@pytest.fixture
def c4():
    return generate("cycle", [4])


@pytest.fixture
def c5():
    return generate("cycle", [5])


@pytest.fixture
def c6():
    return generate("cycle", [6])


@pytest.fixture
def p6():
    return generate("path", [6])
