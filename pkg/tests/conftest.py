import pytest

from codeword_paradoxes.codes import five_qubit_code, mermin_code, steane_code
from codeword_paradoxes.kochen_specker import (build_ks_set,
                                               build_orthogonality_graph,
                                               enumerate_contexts)


@pytest.fixture(scope="session")
def five():
    return five_qubit_code()


@pytest.fixture(scope="session")
def five_group(five):
    return five.group()


@pytest.fixture(scope="session")
def mermin():
    return mermin_code()


@pytest.fixture(scope="session")
def steane():
    return steane_code()


@pytest.fixture(scope="session")
def ks_vertices():
    return build_ks_set()


@pytest.fixture(scope="session")
def ks_graph(ks_vertices):
    return build_orthogonality_graph(ks_vertices)


@pytest.fixture(scope="session")
def ks_contexts(ks_graph):
    return enumerate_contexts(ks_graph)
