"""Fock space model of the equivariant cohomology of Hilb^n(C^2).

Basis vectors |mu> = (1/z(mu)) prod alpha_{-mu_i} v_0.  In this normalization
alpha_{-k}|mu> = k (m_k(mu) + 1) |mu + k> and alpha_k|mu> = |mu - k> when k is
a part of mu (zero otherwise); both follow from [alpha_k, alpha_l] = k delta.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Mapping

from .partitions import Partition, as_partition, enumerate_partitions, z_factor
from .scalars import DEFAULT_FIELD, RationalFunctionField, Scalar
from .series import QSeries

__all__ = [
    "FockVector",
    "FockOperator",
    "alpha_apply",
    "pairing_eta",
    "pairing_eta_tilde",
    "eta",
    "eta_tilde",
    "pairing_hermitian",
    "gram_matrix",
    "adjoint_check",
    "build_MD",
    "divisor_vector",
    "unit_vector",
    "three_point_series",
]


@dataclass(frozen=True)
class FockVector:
    """Finite combination of |mu> at a fixed level; zero coefficients pruned."""

    level: int
    entries: Mapping[Partition, object] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mu, c in self.entries.items():
            mu = as_partition(mu)
            if mu.size != self.level:
                raise ValueError(f"{list(mu)} is not a partition of {self.level}")
            if _nonzero(c):
                clean[mu] = c
        object.__setattr__(self, "entries", clean)

    @classmethod
    def basis(cls, mu, coeff=1) -> "FockVector":
        mu = as_partition(mu)
        return cls(mu.size, {mu: coeff})

    def __getitem__(self, mu):
        return self.entries.get(as_partition(mu), 0)

    def __add__(self, other: "FockVector") -> "FockVector":
        if other.level != self.level:
            raise ValueError("adding vectors of different levels")
        out = dict(self.entries)
        for mu, c in other.entries.items():
            out[mu] = out[mu] + c if mu in out else c
        return FockVector(self.level, out)

    def __neg__(self) -> "FockVector":
        return FockVector(self.level, {mu: -c for mu, c in self.entries.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, c) -> "FockVector":
        return FockVector(self.level, {mu: x * c for mu, x in self.entries.items()})

    def __mul__(self, c) -> "FockVector":
        return self.scale(c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.entries

    def coordinates(self, zero=0) -> list:
        return [self.entries.get(mu, zero) for mu in enumerate_partitions(self.level)]

    @classmethod
    def from_coordinates(cls, level: int, coords) -> "FockVector":
        return cls(level, dict(zip(enumerate_partitions(level), coords)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector) or other.level != self.level:
            return NotImplemented
        keys = set(self.entries) | set(other.entries)
        return all(_is_zero(_sub(self.entries.get(k, 0), other.entries.get(k, 0))) for k in keys)

    def __hash__(self):
        return hash((self.level, frozenset(self.entries)))


def _nonzero(c) -> bool:
    if isinstance(c, QSeries):
        return not c.is_zero()
    return bool(c)


def _is_zero(c) -> bool:
    return not _nonzero(c)


def _sub(a, b):
    return a - b


def alpha_apply(k: int, v: FockVector) -> FockVector:
    if k == 0:
        raise ValueError("alpha_0 is not part of the Heisenberg algebra used here")
    if k < 0:
        out: dict = {}
        part = -k
        for mu, c in v.entries.items():
            nu = mu.add_part(part)
            w = c * (part * (mu.multiplicities()[part] + 1))
            out[nu] = out[nu] + w if nu in out else w
        return FockVector(v.level + part, out)
    out = {}
    for mu, c in v.entries.items():
        if k in mu:
            nu = mu.remove_part(k)
            out[nu] = out[nu] + c if nu in out else c
    return FockVector(v.level - k, out)


def _apply_word(word: tuple[int, ...], v: FockVector) -> FockVector:
    """Apply alpha_{word[0]} alpha_{word[1]} ... (rightmost first)."""
    for k in reversed(word):
        v = alpha_apply(k, v)
        if v.is_zero():
            break
    return v


# --- pairings ----------------------------------------------------------------


def eta(mu, nu, field: RationalFunctionField | None = None) -> Scalar:
    """<mu|nu> = (-1)^{|mu|-l(mu)} / (t1 t2)^{l(mu)} * delta / z(mu)."""
    field = field or DEFAULT_FIELD
    mu, nu = as_partition(mu), as_partition(nu)
    if mu.size != nu.size:
        raise ValueError("pairing of different levels")
    if mu != nu:
        return field.zero
    t1t2 = field.gen("t1") * field.gen("t2")
    sign = -1 if (mu.size - mu.length) % 2 else 1
    return t1t2 ** (-mu.length) * Fraction(sign, z_factor(mu))


def eta_tilde(mu, nu, field: RationalFunctionField | None = None) -> Scalar:
    """The sign-free pairing 1/(t1 t2)^{l(mu)} * delta / z(mu)."""
    field = field or DEFAULT_FIELD
    mu, nu = as_partition(mu), as_partition(nu)
    if mu.size != nu.size:
        raise ValueError("pairing of different levels")
    if mu != nu:
        return field.zero
    t1t2 = field.gen("t1") * field.gen("t2")
    return t1t2 ** (-mu.length) * Fraction(1, z_factor(mu))


def _bilinear(f: FockVector, g: FockVector, form, field):
    if f.level != g.level:
        raise ValueError("pairing of different levels")
    acc = None
    for mu, a in f.entries.items():
        b = g.entries.get(mu)
        if b is None:
            continue
        term = a * b * form(mu, mu, field)
        acc = term if acc is None else acc + term
    return acc if acc is not None else field.zero


def pairing_eta(f, g, field: RationalFunctionField | None = None):
    """Bilinear extension of ``eta``; accepts partitions or FockVectors."""
    field = field or DEFAULT_FIELD
    if not isinstance(f, FockVector):
        return eta(f, g, field)
    return _bilinear(f, g, eta, field)


def pairing_eta_tilde(f, g, field: RationalFunctionField | None = None):
    field = field or DEFAULT_FIELD
    if not isinstance(f, FockVector):
        return eta_tilde(f, g, field)
    return _bilinear(f, g, eta_tilde, field)


def _bar(c):
    if isinstance(c, QSeries):
        return c.map(lambda x: x.bar())
    if isinstance(c, Scalar):
        return c.bar()
    return c


def pairing_hermitian(f: FockVector, g: FockVector, field: RationalFunctionField | None = None):
    """<f, g>_H: linear in f, the bar t_i -> -t_i applied to g's coefficients.

    On basis vectors <mu|nu>_H = delta / ((t1 t2)^{l(mu)} z(mu)).
    """
    field = field or DEFAULT_FIELD
    gb = FockVector(g.level, {mu: _bar(c) for mu, c in g.entries.items()})
    return _bilinear(f, gb, eta_tilde, field)


def gram_matrix(n: int, field: RationalFunctionField | None = None) -> list[list[Scalar]]:
    parts = enumerate_partitions(n)
    return [[eta(a, b, field) for b in parts] for a in parts]


def adjoint_check(k: int, max_level: int = 4, field: RationalFunctionField | None = None) -> bool:
    """eta(alpha_k f, g) = eta(f, alpha_k^* g), alpha_k^* = (-1)^{k-1} (t1 t2)^{sgn k} alpha_{-k}."""
    if k == 0:
        raise ValueError("k must be nonzero")
    field = field or DEFAULT_FIELD
    t1t2 = field.gen("t1") * field.gen("t2")
    factor = t1t2 ** (1 if k > 0 else -1) * (-1 if (k - 1) % 2 else 1)
    for m in range(0, max_level + 1):
        if m - k < 0 or m - k > max_level:
            continue
        for mu in enumerate_partitions(m):
            f = FockVector.basis(mu, field.one)
            left_vec = alpha_apply(k, f)
            for nu in enumerate_partitions(m - k):
                g = FockVector.basis(nu, field.one)
                left = pairing_eta(left_vec, g, field)
                right = pairing_eta(f, alpha_apply(-k, g).scale(factor), field)
                if left != right:
                    return False
    return True


# --- the divisor operator ------------------------------------------------------


@dataclass(frozen=True)
class FockOperator:
    """Square matrix on the level-n subspace; rows/columns in ``enumerate_partitions(n)`` order."""

    n: int
    matrix: tuple
    basis_label: str = "nakajima"

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def rows(self) -> list[list]:
        return [list(r) for r in self.matrix]

    def apply(self, v: FockVector) -> FockVector:
        parts = enumerate_partitions(self.n)
        zero = _zero_like(self.matrix[0][0])
        coords = [v.entries.get(mu, zero) for mu in parts]
        out = []
        for row in self.matrix:
            acc = zero
            for a, b in zip(row, coords):
                if _nonzero(a) and _nonzero(b):
                    acc = acc + a * b
            out.append(acc)
        return FockVector.from_coordinates(self.n, out)

    def at_q0(self) -> list[list[Scalar]]:
        return [[x.coeffs[0] for x in row] for row in self.matrix]

    def coefficient(self, k: int) -> list[list[Scalar]]:
        return [[x.coeffs[k] for x in row] for row in self.matrix]


def _zero_like(x):
    if isinstance(x, QSeries):
        return QSeries.zero(x.order, x.field, x.var)
    return x * 0


def unit_vector(n: int, field: RationalFunctionField | None = None) -> FockVector:
    field = field or DEFAULT_FIELD
    return FockVector.basis(Partition([1] * n), field.one)


def divisor_vector(n: int, field: RationalFunctionField | None = None) -> FockVector:
    """D = -|2, 1^{n-2}>."""
    field = field or DEFAULT_FIELD
    if n < 2:
        return FockVector(n, {})
    return FockVector.basis(Partition([2] + [1] * (n - 2)), -field.one)


def _quantum_factor(k: int, order: int, field) -> QSeries:
    """((-q)^k + 1)/((-q)^k - 1) = -1 - 2 sum_{j>=1} (-q)^{jk}."""
    cs = [field.zero] * (order + 1)
    cs[0] = -field.one
    j = 1
    while j * k <= order:
        cs[j * k] = field((-2) * (-1) ** (j * k))
        j += 1
    return QSeries(cs, order, field)


def build_MD(n: int, q_order: int, field: RationalFunctionField | None = None) -> FockOperator:
    """Matrix of quantum multiplication by D on level n, entries QSeries of order ``q_order``.

    M_D = (t1+t2) sum_k (k/2) f_k(q) alpha_{-k} alpha_k - (t1+t2)/2 f_1(q) |.|
          + 1/2 sum_{k,l} [t1 t2 alpha_{k+l} alpha_{-k} alpha_{-l} - alpha_{-k-l} alpha_k alpha_l]
    with f_k(q) = ((-q)^k + 1)/((-q)^k - 1) and |.| = sum_k alpha_{-k} alpha_k.
    """
    if n < 1:
        raise ValueError("n must be positive")
    field = field or DEFAULT_FIELD
    t1, t2 = field.gen("t1"), field.gen("t2")
    s, p = t1 + t2, t1 * t2
    parts = enumerate_partitions(n)
    index = {mu: i for i, mu in enumerate(parts)}
    f = {k: _quantum_factor(k, q_order, field) for k in range(1, n + 1)}
    zero = QSeries.zero(q_order, field)
    cols = []
    for mu in parts:
        col = [zero] * len(parts)
        v = FockVector.basis(mu, field.one)

        def add(w: FockVector, coeff):
            for nu, c in w.entries.items():
                col[index[nu]] = col[index[nu]] + coeff * c

        for k in range(1, n + 1):
            add(_apply_word((-k, k), v), f[k] * (s * Fraction(k, 2)))
            add(_apply_word((-k, k), v), f[1] * (s * Fraction(-1, 2)))
        for k in range(1, n + 1):
            for l in range(1, n + 1 - k):
                add(_apply_word((k + l, -k, -l), v), QSeries.constant(p * Fraction(1, 2), q_order, field))
                add(_apply_word((-k - l, k, l), v), QSeries.constant(field(Fraction(-1, 2)), q_order, field))
        cols.append(col)
    matrix = tuple(tuple(cols[j][i] for j in range(len(parts))) for i in range(len(parts)))
    return FockOperator(n, matrix)


def three_point_series(mu1, mu2, n: int, q_order: int, field: RationalFunctionField | None = None) -> QSeries:
    """sum_d <mu1, (2), mu2>_{0,d} q^d = eta(mu1, -M_D mu2)."""
    field = field or DEFAULT_FIELD
    mu1, mu2 = as_partition(mu1), as_partition(mu2)
    if mu1.size != n or mu2.size != n:
        raise ValueError("insertions must be partitions of n")
    M = build_MD(n, q_order, field)
    image = M.apply(FockVector.basis(mu2, QSeries.constant(1, q_order, field)))
    c = image.entries.get(mu1)
    if c is None:
        return QSeries.zero(q_order, field)
    return -(c * eta(mu1, mu1, field))
