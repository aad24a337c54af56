import pytest

from aspherical.multipartition import parse_multipartition
from aspherical.parameters import HyperplaneParams


@pytest.fixture
def mp():
    return parse_multipartition


@pytest.fixture
def hp():
    def make(ell, i, j, m, t):
        return HyperplaneParams(ell, i, j, m, t)
    return make
