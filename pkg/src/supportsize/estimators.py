"""Support-size and unseen-species estimators on fingerprints.

Four estimators: the plug-in (number of distinct observed symbols), the Chao
ratio phi_1^2 / (2 phi_2), the modified Chao ratio with denominator
2 (phi_2 + 1) which is always defined, and the Chebyshev linear estimator
whose coefficients come from a shifted-and-scaled Chebyshev polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import binom

from .poisson_model import Fingerprint

ESTIMATOR_IDS = ("plugin", "chao", "modified_chao", "chebyshev")

DEFAULT_C0 = 0.45
DEFAULT_C1 = 0.5


class UndefinedEstimateError(ZeroDivisionError):
    """The Chao estimator is undefined when phi_2 = 0."""


@dataclass(frozen=True)
class EstimatorOutput:
    value: float
    estimator_id: str


def plugin_support(fp: Fingerprint) -> float:
    """Number of distinct observed symbols, sum of phi_i for i >= 1."""
    return float(sum(fp.phi.values()))


def chao_unseen(fp: Fingerprint) -> float:
    """phi_1^2 / (2 phi_2); raises when phi_2 = 0."""
    phi2 = fp.get(2)
    if phi2 == 0:
        raise UndefinedEstimateError("phi_2 = 0")
    return fp.get(1) ** 2 / (2.0 * phi2)


def modified_chao_unseen(fp: Fingerprint) -> float:
    """phi_1^2 / (2 (phi_2 + 1)); defined on every fingerprint."""
    return fp.get(1) ** 2 / (2.0 * (fp.get(2) + 1))


def support_estimate(
    fp: Fingerprint,
    unseen: str,
    *,
    k: int | None = None,
    n: float | None = None,
    c0: float = DEFAULT_C0,
    c1: float = DEFAULT_C1,
) -> EstimatorOutput:
    """Plug-in count plus the selected unseen-symbol estimate.

    The chebyshev choice is a direct linear support estimator and requires
    k and n. The chao choice propagates UndefinedEstimateError.
    """
    if unseen == "chao":
        value = plugin_support(fp) + chao_unseen(fp)
    elif unseen == "modified_chao":
        value = plugin_support(fp) + modified_chao_unseen(fp)
    elif unseen == "chebyshev":
        if k is None or n is None:
            raise ValueError("chebyshev estimator requires k and n")
        return chebyshev_support(fp, k, n, c0, c1)
    else:
        raise ValueError(f"unknown unseen estimator {unseen!r}")
    return EstimatorOutput(value=value, estimator_id=unseen)


def _shift_polynomial(coeffs: np.ndarray, shift: float) -> np.ndarray:
    """Coefficients of p(x + shift) in the monomial basis."""
    out = np.zeros_like(coeffs)
    for i in range(len(coeffs)):
        for j in range(i + 1):
            out[j] += coeffs[i] * shift ** (i - j) * binom(i, j)
    return out


@lru_cache(maxsize=256)
def chebyshev_coefficients(
    k: int, n: float, c0: float = DEFAULT_C0, c1: float = DEFAULT_C1
) -> np.ndarray:
    """Linear-estimator coefficients g_1..g_L for counts up to the degree
    cutoff L = floor(c0 log k); counts above L keep coefficient 1.

    Built from the degree-L Chebyshev polynomial shifted to the interval
    [1/k, c1 log k / n] and rescaled so the estimator interpolates between
    aggressive extrapolation on rare symbols and the plug-in on common ones.
    Returns an empty array (pure plug-in) when the degree cutoff is below 1
    or the interval degenerates, which happens once n is large enough that
    every symbol is well sampled.
    """
    L = math.floor(c0 * math.log(k))
    left, right = 1.0 / k, c1 * math.log(k) / n
    if L < 1 or right <= left:
        return np.zeros(0)
    cheb_coeffs = np.polynomial.chebyshev.cheb2poly(
        np.polynomial.chebyshev.Chebyshev.basis(L).coef
    )
    shift = (right + left) / (right - left)
    scaling = 2.0 / (n * (right - left))
    a = _shift_polynomial(cheb_coeffs, -shift)
    g = -a / a[0]
    g[0] = 0.0
    for j in range(1, L + 1):
        for i in range(1, j + 1):
            g[j] *= i * scaling
        g[j] += 1.0
    coeffs = g[1:]
    coeffs.flags.writeable = False
    return coeffs


def chebyshev_support(
    fp: Fingerprint,
    k: int,
    n: float,
    c0: float = DEFAULT_C0,
    c1: float = DEFAULT_C1,
) -> EstimatorOutput:
    """Chebyshev linear support estimator, sum of g_i * phi_i.

    Clamped at zero: the polynomial coefficients alternate in sign, so
    unlucky fingerprints can otherwise dip below any attainable support.
    """
    if k < 2 or n <= 0:
        raise ValueError("chebyshev estimator requires k >= 2 and n > 0")
    if c0 <= 0 or c1 <= 0:
        raise ValueError("c0 and c1 must be positive")
    g = chebyshev_coefficients(k, float(n), c0, c1)
    L = len(g)
    value = math.fsum(
        (g[i - 1] if i <= L else 1.0) * count for i, count in fp.phi.items()
    )
    return EstimatorOutput(value=max(value, 0.0), estimator_id="chebyshev")
