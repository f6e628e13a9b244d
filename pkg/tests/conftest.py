import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import pytest

from bergex.constructions import fano_plane, fano_incidence_graph
from bergex.core import complete_bipartite, complete_graph, cycle_graph


@pytest.fixture(scope="session")
def fano():
    return fano_plane()


@pytest.fixture(scope="session")
def fano_incidence():
    return fano_incidence_graph()


@pytest.fixture(scope="session")
def k22():
    return complete_bipartite(2, 2)


@pytest.fixture(scope="session")
def k23():
    return complete_bipartite(2, 3)


@pytest.fixture(scope="session")
def k3():
    return complete_graph(3)


@pytest.fixture(scope="session")
def c2():
    return cycle_graph(2)
