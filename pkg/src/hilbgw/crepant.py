"""Closed-form data on the symmetric-product side and the crepant comparison.

All arithmetic with i and s = (t1 t2)^{1/2} lives here, in ``ExtensionField``.
Values handed back to the rest of the package are projected to the base field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bernoulli import hodge_exponent_coefficient
from .fock import eta, eta_tilde
from .partitions import Partition, as_partition, character, enumerate_partitions
from .rmatrix import hilb_anchor
from .scalars import DEFAULT_FIELD, ExtensionField, ExtScalar, RationalFunctionField
from .series import QPoly, QRational, QSeries, series_exp

__all__ = [
    "CrepantReport",
    "sym_R_u0",
    "sym_idempotents",
    "sym_idempotent_gram",
    "mu_tilde_map",
    "crepant_substitute",
    "anchor_comparison",
    "hilb_sym_coincide_n1",
    "pairing_transport_check",
    "roundtrip_check",
]


def _ext(field: RationalFunctionField | None = None) -> ExtensionField:
    return ExtensionField(field or DEFAULT_FIELD)


def _sqrt_power(E: ExtensionField, ell: int) -> ExtScalar:
    """(t1 t2)^{ell/2} with the positive formal root s."""
    return E.s**ell


def sym_R_u0(n: int, z_order: int, field: RationalFunctionField | None = None) -> dict:
    """Diagonal entries exp(-sum_m B_2m/(2m(2m-1)) sum_i ((mu_i t1)^{1-2m} + (mu_i t2)^{1-2m}) z^{2m-1})."""
    field = field or DEFAULT_FIELD
    t1, t2 = field.gen("t1"), field.gen("t2")
    out = {}
    for mu in enumerate_partitions(n):
        cs = [field.zero] * (z_order + 1)
        m = 1
        while 2 * m - 1 <= z_order:
            e = 2 * m - 1
            acc = field.zero
            for part in mu:
                acc = acc + (t1 * part) ** (-e) + (t2 * part) ** (-e)
            cs[e] = -acc * hodge_exponent_coefficient(m)
            m += 1
        out[mu] = series_exp(QSeries(cs, z_order, field, var="z"))
    return out


def mu_tilde_map(mu, field: RationalFunctionField | None = None) -> ExtScalar:
    """The factor (-i)^{l(mu) - |mu|} in |mu~> = (-i)^{l - |mu|} |mu>."""
    E = _ext(field)
    mu = as_partition(mu)
    return (-E.i) ** (mu.length - mu.size)


def pairing_transport_check(n: int, field: RationalFunctionField | None = None) -> bool:
    """eta~(mu~, nu~) = eta(mu, nu) for all partitions of n."""
    field = field or DEFAULT_FIELD
    E = _ext(field)
    ps = enumerate_partitions(n)
    for mu in ps:
        for nu in ps:
            lhs = mu_tilde_map(mu, field) * mu_tilde_map(nu, field) * eta_tilde(mu, nu, field)
            if lhs != E(eta(mu, nu, field)):
                return False
    return True


def sym_idempotents(n: int, field: RationalFunctionField | None = None) -> dict:
    """I^lam = sum_mu chi_lam(mu) (t1 t2)^{l(mu)/2} I_mu, as dicts mu -> ExtScalar."""
    E = _ext(field)
    ps = enumerate_partitions(n)
    return {lam: {mu: _sqrt_power(E, mu.length) * character(lam, mu) for mu in ps} for lam in ps}


def sym_idempotent_gram(n: int, field: RationalFunctionField | None = None) -> dict:
    """eta~(I^lam, I^lam') for all pairs."""
    field = field or DEFAULT_FIELD
    E = _ext(field)
    I = sym_idempotents(n, field)
    out = {}
    for a, va in I.items():
        for b, vb in I.items():
            acc = E.zero
            for mu in va:
                acc = acc + va[mu] * vb[mu] * eta_tilde(mu, mu, field)
            out[(a, b)] = acc
    return out


def _r_sym0_columns(n: int, z_order: int, field) -> dict:
    """R^Sym|_{u=0}(I^lam) written in V: built from the diagonal R, the idempotents and mu~."""
    E = _ext(field)
    diag = sym_R_u0(n, z_order, field)
    I = sym_idempotents(n, field)
    out = {}
    for lam, vec in I.items():
        col = {}
        for mu, c in vec.items():
            # |mu> in V~ equals (-i)^{-(l - |mu|)} |mu~>, i.e. the V-vector mu_tilde^{-1} |mu>
            back = mu_tilde_map(mu, field).inverse()
            col[mu] = [c * back * diag[mu].coeffs[k] for k in range(z_order + 1)]
        out[lam] = col
    return out


def _column1(n: int, z_order: int, field) -> dict:
    """sum_mu chi_lam(mu) sqrt(-1)^{l - |mu|} (t1t2)^{l/2} prod_i exp(sum_m B/(..)((-z/mu_i t1)^{2m-1} + (-z/mu_i t2)^{2m-1})) |mu>."""
    E = _ext(field)
    t1, t2 = field.gen("t1"), field.gen("t2")
    out = {}
    for lam in enumerate_partitions(n):
        col = {}
        for mu in enumerate_partitions(n):
            prefactor = E.i ** (mu.length - mu.size) * _sqrt_power(E, mu.length) * character(lam, mu)
            series = QSeries.constant(1, z_order, field, var="z")
            for part in mu:
                cs = [field.zero] * (z_order + 1)
                m = 1
                while 2 * m - 1 <= z_order:
                    e = 2 * m - 1
                    sign = (-1) ** e
                    cs[e] = hodge_exponent_coefficient(m) * sign * ((t1 * part) ** (-e) + (t2 * part) ** (-e))
                    m += 1
                series = series * series_exp(QSeries(cs, z_order, field, var="z"))
            col[mu] = [prefactor * series.coeffs[k] for k in range(z_order + 1)]
        out[lam] = col
    return out


def anchor_comparison(n: int, z_order: int, field: RationalFunctionField | None = None) -> dict:
    """Compare the two closed forms for R at the comparison point, column by column."""
    field = field or DEFAULT_FIELD
    a = _r_sym0_columns(n, z_order, field)
    b = _column1(n, z_order, field)
    mismatches = []
    for lam in a:
        for mu in a[lam]:
            for k in range(z_order + 1):
                if a[lam][mu][k] != b[lam][mu][k]:
                    mismatches.append((list(lam), list(mu), k))
    return {"n": n, "z_order": z_order, "equal": not mismatches, "mismatches": mismatches}


def hilb_sym_coincide_n1(z_order: int, field: RationalFunctionField | None = None) -> bool:
    """For n = 1 the Hilb anchor and the Sym anchor are the same series."""
    field = field or DEFAULT_FIELD
    return hilb_anchor(Partition([1]), z_order, field) == sym_R_u0(1, z_order, field)[Partition([1])]


# --- the substitution -q = e^{iu} -----------------------------------------------


@dataclass
class CrepantReport:
    genus: int
    insertions: tuple
    n: int
    rational: QRational | None
    reconstruction_ok: bool
    pole_at_minus_one: bool
    u_order: int
    u_expansion: list | None  # ExtScalar coefficients of u^k
    sym_prediction: list | None

    def to_json(self) -> dict:
        def enc(xs):
            return None if xs is None else [x.to_json() for x in xs]

        return {
            "genus": self.genus,
            "insertions": [list(m) for m in self.insertions],
            "n": self.n,
            "rational_form": None if self.rational is None else str(self.rational),
            "reconstruction_ok": self.reconstruction_ok,
            "pole_at_q_minus_one": self.pole_at_minus_one,
            "u_order": self.u_order,
            "u_expansion": enc(self.u_expansion),
            "sym_prediction": enc(self.sym_prediction),
        }


def _minus_exp_iu(u_order: int, E: ExtensionField) -> QSeries:
    """q(u) = -e^{iu} as a u-series over the extension field."""
    cs = [-(E.i**k) * Fraction(1, factorial(k)) for k in range(u_order + 1)]
    return QSeries(cs, u_order, E, var="u")


def _poly_at(poly: QPoly, x: QSeries, E: ExtensionField) -> QSeries:
    acc = QSeries.zero(x.order, E, x.var)
    for c in reversed(poly.coeffs):
        acc = acc * x + E(c)
    return acc


def crepant_substitute(
    rational: QRational,
    u_order: int = 6,
    genus: int = 0,
    insertions=(),
    n: int = 0,
    field: RationalFunctionField | None = None,
) -> CrepantReport:
    """Substitute q = -e^{iu} into P/Q and expand in u when Q(-1) != 0."""
    field = field or DEFAULT_FIELD
    E = _ext(field)
    ins = tuple(as_partition(m) for m in insertions)
    pole = not rational.den(field(-1))
    if pole:
        return CrepantReport(genus, ins, n, rational, True, True, u_order, None, None)
    q_of_u = _minus_exp_iu(u_order, E)
    P = _poly_at(rational.num, q_of_u, E)
    Q = _poly_at(rational.den, q_of_u, E)
    f = P * Q.inverse()
    expansion = list(f.coeffs)
    # <mu>^Sym = <mu~>^Hilb-normalization: divide out the (-i)^{l - |mu|} rescaling of each insertion
    factor = E.one
    for mu in ins:
        factor = factor * mu_tilde_map(mu, field)
    inv = factor.inverse()
    prediction = [c * inv for c in expansion]
    return CrepantReport(genus, ins, n, rational, True, False, u_order, expansion, prediction)


def roundtrip_check(report: CrepantReport, field: RationalFunctionField | None = None) -> bool:
    """Re-expand the u-series at u = i sum_k (1+q)^k / k and compare with P/Q expanded at q = -1.

    -q = e^{iu} means iu = log(1 - (1+q)), so u = i sum_{k>=1} w^k / k with w = 1 + q.
    """
    if report.u_expansion is None:
        return False
    field = field or DEFAULT_FIELD
    E = _ext(field)
    N = report.u_order
    u_of_w = QSeries([E.zero] + [E.i * Fraction(1, k) for k in range(1, N + 1)], N, E, var="w")
    lhs = QSeries.zero(N, E, "w")
    power = QSeries.constant(1, N, E, "w")
    for c in report.u_expansion:
        lhs = lhs + power * c
        power = power * u_of_w
    q_of_w = QSeries([E(-1), E.one], N, E, var="w")
    rhs = _poly_at(report.rational.num, q_of_w, E) * _poly_at(report.rational.den, q_of_w, E).inverse()
    return lhs == rhs
