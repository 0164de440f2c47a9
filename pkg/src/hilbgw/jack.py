"""Jack symmetric functions and the fixed-point classes J^lambda.

Symmetric functions of degree n are stored by their power-sum coefficients
(a dict Partition -> coefficient).  The Nakajima vector |mu> corresponds to
p_mu / z(mu), so the |mu>-coordinate of sum c_mu p_mu is c_mu z(mu).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fock import FockVector, pairing_eta
from .linalg import matrix_inverse, solve_linear
from .partitions import (
    Partition,
    as_partition,
    character,
    enumerate_partitions,
    euler_class,
    z_factor,
)
from .scalars import DEFAULT_FIELD, RationalFunctionField, Scalar

ALPHA_FIELD = RationalFunctionField(("alpha",))


@dataclass(frozen=True)
class SymmetricFunctionExpansion:
    basis: str
    coefficients: dict

    def __getitem__(self, mu):
        return self.coefficients.get(as_partition(mu), 0)


class _QQ:
    """Minimal field wrapper so generic linear algebra works over Fraction."""

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        return Fraction(x)


QQ = _QQ()


@lru_cache(maxsize=None)
def _power_to_monomial(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row mu: coefficients of p_mu in the monomial basis m_lambda."""
    parts = enumerate_partitions(n)

    def count(mu: tuple[int, ...], lam: tuple[int, ...]) -> int:
        # maps from parts of mu to rows of lam with row sums lam
        @lru_cache(maxsize=None)
        def go(i: int, remaining: tuple[int, ...]) -> int:
            if i == len(mu):
                return 1 if not any(remaining) else 0
            total = 0
            for r, cap in enumerate(remaining):
                if cap >= mu[i]:
                    nxt = remaining[:r] + (cap - mu[i],) + remaining[r + 1 :]
                    total += go(i + 1, nxt)
            return total

        return go(0, tuple(lam))

    return tuple(tuple(Fraction(count(tuple(mu), tuple(lam))) for lam in parts) for mu in parts)


@lru_cache(maxsize=None)
def monomial_in_power_sums(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row lam: power-sum coefficients of m_lam (columns indexed by mu)."""
    P = [list(r) for r in _power_to_monomial(n)]
    inv = matrix_inverse(P, QQ)
    # p = P m  =>  m = P^{-1} p ; row lam of P^{-1}... careful with orientation:
    # p_mu = sum_lam P[mu][lam] m_lam, so m_lam = sum_mu Pinv[lam][mu] p_mu
    return tuple(tuple(row) for row in inv)


def _alpha_pairing(mu: Partition, alpha: Scalar) -> Scalar:
    return alpha ** mu.length * z_factor(mu)


@lru_cache(maxsize=None)
def _jack_P_table(n: int) -> dict:
    alpha = ALPHA_FIELD.gen("alpha")
    parts = enumerate_partitions(n)
    m_in_p = monomial_in_power_sums(n)
    weights = {mu: _alpha_pairing(mu, alpha) for mu in parts}

    def pair(f: dict, g: dict) -> Scalar:
        acc = ALPHA_FIELD.zero
        for mu, a in f.items():
            b = g.get(mu)
            if b:
                acc = acc + a * b * weights[mu]
        return acc

    P: dict = {}
    # increasing lexicographic order is a linear extension of dominance
    for idx in range(len(parts) - 1, -1, -1):
        lam = parts[idx]
        vec = {mu: ALPHA_FIELD(c) for mu, c in zip(parts, m_in_p[idx]) if c}
        for prev in list(P):
            coeff = pair(vec, P[prev]) / pair(P[prev], P[prev])
            if coeff:
                for mu, c in P[prev].items():
                    vec[mu] = vec.get(mu, ALPHA_FIELD.zero) - coeff * c
        P[lam] = {mu: c for mu, c in vec.items() if c}
    return P


def jack_P(lam) -> SymmetricFunctionExpansion:
    lam = as_partition(lam)
    return SymmetricFunctionExpansion("power-sum", dict(_jack_P_table(lam.size)[lam]))


def _coefficient_of_m_1n(f: dict, n: int) -> Scalar:
    # [m_{1^n}] p_mu = n! / prod mu_i! ... computed from the transition table
    parts = enumerate_partitions(n)
    P = _power_to_monomial(n)
    col = len(parts) - 1  # (1^n) is last in reverse-lex order
    acc = ALPHA_FIELD.zero
    for i, mu in enumerate(parts):
        c = f.get(mu)
        if c:
            acc = acc + c * P[i][col]
    return acc


def jack_integral_form(lam) -> SymmetricFunctionExpansion:
    """J_lam in power sums, coefficients in Q(alpha), with [m_{1^n}] J_lam = n!."""
    lam = as_partition(lam)
    n = lam.size
    if n == 0:
        return SymmetricFunctionExpansion("power-sum", {Partition(): ALPHA_FIELD.one})
    Pl = _jack_P_table(n)[lam]
    scale = ALPHA_FIELD(_factorial(n)) / _coefficient_of_m_1n(Pl, n)
    return SymmetricFunctionExpansion("power-sum", {mu: c * scale for mu, c in Pl.items()})


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def schur_power_sum(lam) -> SymmetricFunctionExpansion:
    """s_lam = sum_mu chi_lam(mu) p_mu / z(mu)."""
    lam = as_partition(lam)
    return SymmetricFunctionExpansion(
        "power-sum", {mu: Fraction(character(lam, mu), z_factor(mu)) for mu in enumerate_partitions(lam.size)}
    )


# --- equivariant specialization --------------------------------------------------


def jack_class(lam, field: RationalFunctionField | None = None) -> FockVector:
    """J^lam = t2^{|lam|} t1^{l(.)} J_lam |_{alpha = -t1/t2} as a Nakajima vector."""
    field = field or DEFAULT_FIELD
    lam = as_partition(lam)
    t1, t2 = field.gen("t1"), field.gen("t2")
    alpha_value = -t1 / t2
    J = jack_integral_form(lam).coefficients
    out = {}
    for mu, c in J.items():
        val = c.subs({"alpha": alpha_value}, target=field)
        out[mu] = val * t2 ** lam.size * t1 ** mu.length * z_factor(mu)
    return FockVector(lam.size, out)


@dataclass(frozen=True)
class FixedPointBasis:
    n: int
    partitions: tuple
    transition: list  # column lam = coordinates of J^lam
    inverse: list
    norms: dict  # lam -> eta(J^lam, J^lam)
    classes: dict  # lam -> FockVector


_FP_CACHE: dict = {}


def fixed_point_classes(n: int, field: RationalFunctionField | None = None) -> FixedPointBasis:
    field = field or DEFAULT_FIELD
    key = (n, field.names)
    if key in _FP_CACHE:
        return _FP_CACHE[key]
    parts = enumerate_partitions(n)
    classes = {lam: jack_class(lam, field) for lam in parts}
    T = [[classes[lam].entries.get(mu, field.zero) for lam in parts] for mu in parts]
    Tinv = matrix_inverse(T, field)
    norms = {lam: pairing_eta(classes[lam], classes[lam], field) for lam in parts}
    fp = FixedPointBasis(n, parts, T, Tinv, norms, classes)
    _FP_CACHE[key] = fp
    return fp


def restriction(mu, eta_fix, field: RationalFunctionField | None = None) -> Scalar:
    """mu|_eta: from |mu> = sum_eta (mu|_eta / e(T_eta)) J^eta."""
    field = field or DEFAULT_FIELD
    mu, eta_fix = as_partition(mu), as_partition(eta_fix)
    if mu.size != eta_fix.size:
        raise ValueError("restriction: partitions of different sizes")
    fp = fixed_point_classes(mu.size, field)
    i = fp.partitions.index(eta_fix)
    j = fp.partitions.index(mu)
    return fp.inverse[i][j] * euler_class(eta_fix, field)


def expand_in_fixed_points(v: FockVector, field: RationalFunctionField | None = None) -> dict:
    """Coefficients of v over the basis J^lam."""
    field = field or DEFAULT_FIELD
    fp = fixed_point_classes(v.level, field)
    coords = [v.entries.get(mu, field.zero) for mu in fp.partitions]
    sol = solve_linear(fp.transition, coords, field)
    return dict(zip(fp.partitions, sol))
