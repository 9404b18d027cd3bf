import pytest

from coxrank.graphs import DefiningGraph

C5_EDGES = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")]


@pytest.fixture(scope="session")
def c5():
    """Pentagon: the canonical infinite irreducible non-affine example."""
    return DefiningGraph("abcde", C5_EDGES)


@pytest.fixture(scope="session")
def dinf():
    """Two isolated vertices: the infinite dihedral group."""
    return DefiningGraph("ab")


@pytest.fixture(scope="session")
def c4():
    """Square: join of two anticliques."""
    return DefiningGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


@pytest.fixture(scope="session")
def k3():
    return DefiningGraph("abc", [("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture(scope="session")
def p3():
    return DefiningGraph("abc", [("a", "b"), ("b", "c")])
