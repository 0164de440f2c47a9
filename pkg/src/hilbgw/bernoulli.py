"""Bernoulli numbers and polynomials, with the convention t/(e^t - 1) = sum B_m t^m / m!."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def _table(m: int) -> tuple[Fraction, ...]:
    # sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    B = [Fraction(1)]
    for j in range(1, m + 1):
        B.append(-sum(comb(j + 1, k) * B[k] for k in range(j)) / (j + 1))
    return tuple(B)


def bernoulli_number(m: int) -> Fraction:
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _table(m)[m]


def bernoulli_polynomial(m: int, x):
    """B_m(x) = sum_k C(m, k) B_k x^(m-k); ``x`` may be a Fraction or a Scalar."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    total = 0
    power = 1
    # accumulate from the constant end so integer x stays exact
    for k in range(m, -1, -1):
        total = total + comb(m, k) * bernoulli_number(k) * power
        power = power * x
    return total


def hodge_exponent_coefficient(m: int) -> Fraction:
    """B_{2m} / (2m (2m - 1)), the weight of z^{2m-1} in the Bernoulli exponentials."""
    return bernoulli_number(2 * m) / (2 * m * (2 * m - 1))
