import pytest

from supportsize.distributions import FAMILIES, make_distribution

ZOO_K = 100


@pytest.fixture(params=FAMILIES)
def zoo_distribution(request):
    """One strict-mode zoo member per family at a small k."""
    return make_distribution(request.param, ZOO_K)


def zoo(k):
    return [(family, make_distribution(family, k)) for family in FAMILIES]
