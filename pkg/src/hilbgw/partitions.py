"""Partitions, Young diagrams, torus weights at fixed points, and S_n characters."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

from .scalars import DEFAULT_FIELD, RationalFunctionField, Scalar


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def boxes(self) -> list[tuple[int, int]]:
        """Boxes (i, j), 1-based: row i, column j."""
        return [(i + 1, j + 1) for i, row in enumerate(self) for j in range(row)]

    def n_statistic(self) -> int:
        """n(lambda) = sum (i-1) lambda_i."""
        return sum(i * p for i, p in enumerate(self))

    def add_part(self, k: int) -> "Partition":
        return Partition(self + (k,))

    def remove_part(self, k: int) -> "Partition":
        parts = list(self)
        parts.remove(k)
        return Partition(parts)

    def to_json(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def z_factor(mu) -> int:
    """z(mu) = |Aut mu| * prod mu_i."""
    mu = as_partition(mu)
    out = 1
    for part, mult in mu.multiplicities().items():
        out *= factorial(mult) * part**mult
    return out


def arm_leg(lam, box: tuple[int, int]) -> tuple[int, int]:
    """(a, l) with a = lam'_j - i and l = lam_i - j.

    This is the convention of the source formulas for the tangent weights:
    ``a`` is measured down the column and ``l`` along the row, which is the
    reverse of the usual textbook naming.
    """
    lam = as_partition(lam)
    i, j = box
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"box {box} not in diagram of {list(lam)}")
    conj = lam.conjugate()
    return conj[j - 1] - i, lam[i - 1] - j


def content_sum(lam, field: RationalFunctionField | None = None) -> Scalar:
    """c(lam) = sum over boxes of (j-1) t1 + (i-1) t2."""
    field = field or DEFAULT_FIELD
    t1, t2 = field.gen("t1"), field.gen("t2")
    lam = as_partition(lam)
    a = sum(j - 1 for _, j in lam.boxes())
    b = sum(i - 1 for i, _ in lam.boxes())
    return t1 * a + t2 * b


def tangent_weights(lam, field: RationalFunctionField | None = None) -> list[Scalar]:
    """The 2n torus weights of the tangent space at the fixed point ``lam``."""
    field = field or DEFAULT_FIELD
    t1, t2 = field.gen("t1"), field.gen("t2")
    lam = as_partition(lam)
    out = []
    for box in lam.boxes():
        a, l = arm_leg(lam, box)
        out.append(t1 * (l + 1) - t2 * a)
        out.append(t2 * (a + 1) - t1 * l)
    return out


def euler_class(lam, field: RationalFunctionField | None = None) -> Scalar:
    field = field or DEFAULT_FIELD
    out = field.one
    for w in tangent_weights(lam, field):
        out = out * w
    return out


def bernoulli_weight_sum(lam, m: int, field: RationalFunctionField | None = None) -> Scalar:
    """N_{2m-1, lam}: sum over boxes of 1/(a t2 - (l+1) t1)^{2m-1} + 1/(l t1 - (a+1) t2)^{2m-1}."""
    if m < 1:
        raise ValueError("m must be positive")
    field = field or DEFAULT_FIELD
    t1, t2 = field.gen("t1"), field.gen("t2")
    lam = as_partition(lam)
    e = 2 * m - 1
    total = field.zero
    for box in lam.boxes():
        a, l = arm_leg(lam, box)
        total = total + (t2 * a - t1 * (l + 1)) ** (-e) + (t1 * l - t2 * (a + 1)) ** (-e)
    return total


# --- characters ------------------------------------------------------------


def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    parts = list(lam) + [0] * (length - len(lam))
    return tuple(parts[i] + (length - 1 - i) for i in range(length))


def _from_beta(beta: tuple[int, ...]) -> Partition:
    length = len(beta)
    bs = sorted(beta, reverse=True)
    return Partition(p for p in (bs[i] - (length - 1 - i) for i in range(length)) if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    k = mu[0]
    rest = Partition(mu[1:])
    length = len(lam) + k
    beta = _beta_set(lam, length)
    occupied = set(beta)
    total = 0
    for b in beta:
        if b - k >= 0 and (b - k) not in occupied:
            # removing a rim hook of length k = sliding a bead down k places
            height = sum(1 for c in beta if b - k < c < b)
            new_beta = tuple(c if c != b else b - k for c in beta)
            total += (-1) ** height * _mn(_from_beta(new_beta), rest)
    return total


def character(lam, mu) -> int:
    """chi_lam(mu) by the Murnaghan-Nakayama rule."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise ValueError("character: partitions of different sizes")
    return _mn(lam, mu)


def dominates(lam, mu) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def hook_product(lam) -> int:
    lam = as_partition(lam)
    conj = lam.conjugate()
    out = 1
    for i, j in lam.boxes():
        out *= (lam[i - 1] - j) + (conj[j - 1] - i) + 1
    return out


def class_size_fraction(mu) -> Fraction:
    """|class of mu| / n! = 1/z(mu)."""
    return Fraction(1, z_factor(mu))
