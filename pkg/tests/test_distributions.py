import math

import numpy as np
import pytest

from supportsize.distributions import (
    DiscreteDistribution,
    FAMILIES,
    make_distribution,
    support_size,
)


def test_uniform_k4():
    P = make_distribution("uniform", 4)
    np.testing.assert_allclose(P.probs, [0.25, 0.25, 0.25, 0.25])
    assert support_size(P) == 4


def test_two_mixture_k4():
    P = make_distribution("two_mixture", 4)
    np.testing.assert_allclose(P.probs, [0.25, 0.75])
    assert support_size(P) == 2


def test_two_mixture_k10_support():
    assert support_size(make_distribution("two_mixture", 10)) == 5


def test_zipf_k10_strict_truncation():
    # largest m with (1/m)/H_m >= 1/10 is m = 4; renormalized probs are
    # [12, 6, 4, 3] / 25
    h = 0.0
    m = 0
    while True:
        cand = h + 1.0 / (m + 1)
        if (1.0 / (m + 1)) / cand < 1.0 / 10:
            break
        h = cand
        m += 1
    assert m == 4
    P = make_distribution("zipf", 10)
    assert support_size(P) == 4
    np.testing.assert_allclose(P.probs, np.array([12, 6, 4, 3]) / 25.0,
                               rtol=1e-14)


def test_uniform_support_is_k():
    for k in (2, 7, 100, 1001):
        assert support_size(make_distribution("uniform", k)) == k


def test_two_mixture_support_is_half_k():
    for k in (2, 10, 100, 1000):
        assert support_size(make_distribution("two_mixture", k)) == k // 2


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("k", [2, 3, 17, 100, 999, 10_000])
def test_invariants_across_k(family, k):
    if family == "two_mixture" and k % 2:
        pytest.skip("two_mixture needs even k")
    P = make_distribution(family, k)
    probs = P.probs
    assert abs(math.fsum(probs) - 1.0) <= 1e-12
    assert np.all(probs > 0)
    assert probs.min() >= 1.0 / k - 1e-12
    assert support_size(P) <= k


def test_geometric_strict_truncation_monotone():
    # geometric weights decay, so the strict support is a proper prefix of k
    P = make_distribution("geometric", 1000)
    assert 1 < support_size(P) < 1000
    assert np.all(np.diff(P.probs) < 0)


def test_lenient_mode_skips_floor():
    P = make_distribution("zipf", 100, strict=False, support=100)
    assert support_size(P) == 100
    assert P.probs.min() < 1.0 / 100
    assert abs(math.fsum(P.probs) - 1.0) <= 1e-12


def test_errors():
    with pytest.raises(ValueError):
        make_distribution("uniform", 1)
    with pytest.raises(ValueError):
        make_distribution("two_mixture", 7)
    with pytest.raises(ValueError):
        make_distribution("triangular", 10)


def test_validation_rejects_bad_vectors():
    with pytest.raises(ValueError):
        DiscreteDistribution(probs=np.array([0.5, 0.4]), k=2)
    with pytest.raises(ValueError):
        DiscreteDistribution(probs=np.array([1.1, -0.1]), k=2)
    with pytest.raises(ValueError):
        # min prob below the floor in strict mode
        DiscreteDistribution(probs=np.array([0.9, 0.1]), k=4)
    DiscreteDistribution(probs=np.array([0.9, 0.1]), k=4, strict=False)


def test_probs_are_immutable():
    P = make_distribution("uniform", 4)
    with pytest.raises(ValueError):
        P.probs[0] = 0.5
