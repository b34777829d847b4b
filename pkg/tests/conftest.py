import pytest

from treeverse.balanced_trees import perfect_binary, typed_ternary
from treeverse.embedder import host_graph_for


@pytest.fixture(scope="session")
def ternary_hosts():
    """Typed ternary host trees with their radius-2 graphs, keyed by k."""
    out = {}
    for k in (1, 2, 3):
        tree = typed_ternary(k).tree
        out[k] = (tree, host_graph_for(tree))
    return out


@pytest.fixture(scope="session")
def b2():
    return perfect_binary(2)


@pytest.fixture(scope="session")
def b3():
    return perfect_binary(3)
