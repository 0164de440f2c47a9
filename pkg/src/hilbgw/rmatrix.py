"""The R-matrix of the quantum ring at the origin, order by order in z.

We solve z q d/dq S = M_D S with the ansatz

    S = Psi_un . Rt(z) . H^{-1/2} . e^{u/z},

where Psi_un has the eigenvector columns f_lam, H = diag(eta(f_lam, f_lam))
and Rt = H^{-1/2} R_can H^{1/2} is the canonical R-matrix conjugated into a
frame free of square roots.  With A = Psi_un^{-1} q d/dq Psi_un and
Lam = diag(q h'/h) the z^{k+1} part of the equation reads

    X_k := A Rt_k + q d/dq Rt_k - 1/2 Rt_k Lam = [diag(v), Rt_{k+1}].

Off-diagonal entries of Rt_{k+1} are divided out of X_k; the diagonal of the
next equation, together with diag(A) = Lam/2, gives

    q d/dq (Rt_{k+1})_{ll} = - sum_{m != l} A_{lm} (Rt_{k+1})_{ml},

integrated termwise with the q^0 constant taken from the Bernoulli closed form
of the degree-0 theory.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property

from .bernoulli import hodge_exponent_coefficient
from .fock import FockOperator, FockVector, build_MD, eta, pairing_hermitian
from .frobenius import EigenData, eigen_decompose
from .jack import fixed_point_classes
from .linalg import matrix_inverse, solve_linear
from .partitions import as_partition, bernoulli_weight_sum, content_sum, enumerate_partitions
from .scalars import DEFAULT_FIELD, RationalFunctionField
from .series import QSeries, series_exp

__all__ = [
    "RMatrix",
    "QDESolution",
    "RecursionError",
    "hilb_anchor",
    "compute_R",
    "symplectic_check",
    "qde_residual_check",
    "anchor_check",
    "solve_Y",
    "divisor_consistency",
    "y_pairing_check",
]


class RecursionError(ArithmeticError):
    pass


def hilb_anchor(lam, z_order: int, field: RationalFunctionField | None = None) -> QSeries:
    """exp(sum_m B_2m/(2m(2m-1)) z^{2m-1} N_{2m-1,lam}) as a series in z."""
    field = field or DEFAULT_FIELD
    cs = [field.zero] * (z_order + 1)
    m = 1
    while 2 * m - 1 <= z_order:
        cs[2 * m - 1] = bernoulli_weight_sum(lam, m, field) * hodge_exponent_coefficient(m)
        m += 1
    return series_exp(QSeries(cs, z_order, field, var="z"))


def _zero(order, field):
    return QSeries.zero(order, field)


def _const(c, order, field):
    return QSeries.constant(c, order, field)


def _mm(A, B, order, field):
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = None
            for k in range(m):
                a, b = A[i][k], B[k][j]
                if not a or not b:
                    continue
                acc = a * b if acc is None else acc + a * b
            row.append(acc if acc is not None else _zero(order, field))
        out.append(row)
    return out


def _madd(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _mzero(p, order, field):
    return [[_zero(order, field) for _ in range(p)] for _ in range(p)]


def _mident(p, order, field):
    return [[_const(1 if i == j else 0, order, field) for j in range(p)] for i in range(p)]


def _is_zero_matrix(A) -> bool:
    return all(x.is_zero() for row in A for x in row)


@dataclass(eq=False)
class RMatrix:
    """Rt_0, ..., Rt_K in the conjugated canonical frame; entries QSeries in q."""

    n: int
    z_order: int
    q_order: int
    eigen: EigenData
    tilde: list
    anchors: dict = dc_field(default_factory=dict)
    basis_label: str = "unnormalized-idempotent"

    @property
    def field(self) -> RationalFunctionField:
        return self.eigen.field

    @property
    def partitions(self):
        return self.eigen.partitions

    @cached_property
    def flat(self) -> list:
        """R_flat,k = Psi_un Rt_k Psi_un^{-1} in the Nakajima basis."""
        F, Finv = self.eigen.psi, self.eigen.psi_inverse
        N, fld = self.q_order, self.field
        return [_mm(_mm(F, Rk, N, fld), Finv, N, fld) for Rk in self.tilde]

    @cached_property
    def tilde_inverse(self) -> list:
        """Series inverse of Rt(z), computed by the plain recursion S_k = -sum R_j S_{k-j}."""
        p, N, fld = len(self.partitions), self.q_order, self.field
        out = [_mident(p, N, fld)]
        for k in range(1, self.z_order + 1):
            acc = _mzero(p, N, fld)
            for j in range(1, k + 1):
                acc = _madd(acc, _mm(self.tilde[j], out[k - j], N, fld))
            out.append([[-x for x in row] for row in acc])
        return out

    def coefficient(self, k: int, basis: str = "canonical") -> list:
        if basis == "canonical":
            return self.tilde[k]
        if basis == "flat":
            return self.flat[k]
        raise ValueError(f"unknown basis {basis!r}")

    def at_q0(self, k: int, basis: str = "canonical") -> list:
        return [[x.coeffs[0] for x in row] for row in self.coefficient(k, basis)]


def compute_R(
    n: int,
    z_order: int = 5,
    q_order: int = 8,
    field: RationalFunctionField | None = None,
    eigen: EigenData | None = None,
    M: FockOperator | None = None,
    anchor=None,
) -> RMatrix:
    """Solve the R-matrix recursion to z^K and q^N.

    ``anchor(lam, K, field)`` supplies the q^0 diagonal as a z-series; the
    default is the Bernoulli closed form ``hilb_anchor``.
    """
    field = field or DEFAULT_FIELD
    eigen = eigen or eigen_decompose(n, q_order, field, M=M)
    anchor = anchor or hilb_anchor
    ps = eigen.partitions
    p, N, K = len(ps), q_order, z_order
    F, Finv = eigen.psi, eigen.psi_inverse
    dF = [[x.q_derivative() for x in row] for row in F]
    A = _mm(Finv, dF, N, field)
    Lam = [eigen.norms[lam].q_derivative() / eigen.norms[lam] for lam in ps]
    v = [eigen.eigenvalues[lam] for lam in ps]
    anchors = {lam: anchor(lam, K, field) for lam in ps}
    for i in range(p):
        if A[i][i] * 2 != Lam[i]:
            raise RecursionError("diagonal of the connection is not half the log-derivative of the norm")
    gaps = {(i, j): (v[i] - v[j]).inverse() for i in range(p) for j in range(p) if i != j}

    tilde = [_mident(p, N, field)]
    for k in range(K):
        Rk = tilde[k]
        X = _mm(A, Rk, N, field)
        for i in range(p):
            for j in range(p):
                X[i][j] = X[i][j] + Rk[i][j].q_derivative() - Rk[i][j] * Lam[j] * Fraction(1, 2)
        for i in range(p):
            if not X[i][i].is_zero():
                raise RecursionError(f"QDE residual on the diagonal at z^{k + 1}")
        new = _mzero(p, N, field)
        for i in range(p):
            for j in range(p):
                if i != j and X[i][j]:
                    new[i][j] = X[i][j] * gaps[(i, j)]
        for i, lam in enumerate(ps):
            integrand = _zero(N, field)
            for j in range(p):
                if j != i and A[i][j] and new[j][i]:
                    integrand = integrand - A[i][j] * new[j][i]
            if integrand.coeffs[0]:
                raise RecursionError(f"non-integrable diagonal at z^{k + 1}, partition {list(lam)}")
            new[i][i] = integrand.q_integrate(anchors[lam].coeffs[k + 1])
        tilde.append(new)
    return RMatrix(n, K, N, eigen, tilde, anchors)


def _gram_diag(R: RMatrix):
    return [eta(mu, mu, R.field) for mu in R.partitions]


def symplectic_check(R: RMatrix, basis: str = "flat") -> bool:
    """sum_{i+j=k} (-1)^i R_i^T G R_j = delta_{k0} G, i.e. R^dagger(-z) R(z) = 1.

    In the flat frame G is the eta Gram matrix; in the canonical frame it is
    H = diag(eta(f_lam, f_lam)).
    """
    p, N, fld = len(R.partitions), R.q_order, R.field
    if basis == "flat":
        G = [_const(g, N, fld) for g in _gram_diag(R)]
        mats = R.flat
    else:
        G = [R.eigen.norms[lam] for lam in R.partitions]
        mats = R.tilde
    for k in range(R.z_order + 1):
        acc = _mzero(p, N, fld)
        for i in range(k + 1):
            Ri, Rj = mats[i], mats[k - i]
            sign = -1 if i % 2 else 1
            for a in range(p):
                for b in range(p):
                    s = None
                    for c in range(p):
                        x, y = Ri[c][a], Rj[c][b]
                        if not x or not y:
                            continue
                        t = x * G[c] * y
                        s = t if s is None else s + t
                    if s is not None:
                        acc[a][b] = acc[a][b] + s * sign
        for a in range(p):
            for b in range(p):
                want = G[a] if (k == 0 and a == b) else _zero(N, fld)
                if acc[a][b] != want:
                    return False
    return True


def qde_residual_check(R: RMatrix, M: FockOperator | None = None) -> bool:
    """z q d/dq (Psi Rt H^{-1/2} e^{u/z}) = M_D (...), with e^{u/z} H^{-1/2} stripped.

    Order z^{k+1}:  q d/dq(Psi Rt_k) - 1/2 Psi Rt_k Lam + Psi Rt_{k+1} V - M Psi Rt_{k+1} = 0.
    """
    e = R.eigen
    M = M or e.M
    Mrows = M.rows()
    N, fld, ps = R.q_order, R.field, R.partitions
    p = len(ps)
    Lam = [e.norms[lam].q_derivative() / e.norms[lam] for lam in ps]
    v = [e.eigenvalues[lam] for lam in ps]
    PR = [_mm(e.psi, Rk, N, fld) for Rk in R.tilde]
    # z^0 part: Psi V = M Psi
    for k in range(-1, R.z_order):
        MPR = _mm(Mrows, PR[k + 1], N, fld)
        for a in range(p):
            for b in range(p):
                term = PR[k + 1][a][b] * v[b] - MPR[a][b]
                if k >= 0:
                    term = term + PR[k][a][b].q_derivative() - PR[k][a][b] * Lam[b] * Fraction(1, 2)
                if not term.is_zero():
                    return False
    return True


def anchor_check(R: RMatrix) -> bool:
    """Rt at q = 0 is diagonal and equals the Bernoulli closed form."""
    for k in range(R.z_order + 1):
        for i, lam in enumerate(R.partitions):
            closed = hilb_anchor(lam, R.z_order, R.field).coeffs[k]
            for j in range(len(R.partitions)):
                want = closed if i == j else R.field.zero
                if R.tilde[k][i][j].coeffs[0] != want:
                    return False
    return True


# --- the Y^lambda solutions --------------------------------------------------


@dataclass(frozen=True)
class QDESolution:
    """Y^lam(q) with Y^lam(0) = J^lam; Y^lam q^{-c(lam)} solves q d/dq Phi = M_D Phi."""

    partition: tuple
    q_order: int
    vector: FockVector  # QSeries coefficients


def solve_Y(lam, q_order: int, field: RationalFunctionField | None = None, M: FockOperator | None = None) -> QDESolution:
    """(k - c(lam) - M_0) Y_k = sum_{j>=1} M_j Y_{k-j}, order by order."""
    field = field or DEFAULT_FIELD
    lam = as_partition(lam)
    n = lam.size
    M = M or build_MD(n, q_order, field)
    ps = enumerate_partitions(n)
    p = len(ps)
    c = content_sum(lam, field)
    J = fixed_point_classes(n, field).classes[lam]
    Ms = [M.coefficient(k) for k in range(q_order + 1)]
    Y = [[J.entries.get(mu, field.zero) for mu in ps]]
    for k in range(1, q_order + 1):
        rhs = [field.zero] * p
        for j in range(1, k + 1):
            for a in range(p):
                for b in range(p):
                    if Ms[j][a][b] and Y[k - j][b]:
                        rhs[a] = rhs[a] + Ms[j][a][b] * Y[k - j][b]
        lhs = [[(field(k) - c if a == b else field.zero) - Ms[0][a][b] for b in range(p)] for a in range(p)]
        Y.append(solve_linear(lhs, rhs, field))
    coords = [QSeries([Y[k][a] for k in range(q_order + 1)], q_order, field) for a in range(p)]
    return QDESolution(tuple(lam), q_order, FockVector.from_coordinates(n, coords))


def y_pairing_check(n: int, q_order: int, field: RationalFunctionField | None = None) -> bool:
    """<Y^lam, Y^mu>_H = delta_{lam mu} <J^lam, J^lam>_H through q^N."""
    field = field or DEFAULT_FIELD
    M = build_MD(n, q_order, field)
    ps = enumerate_partitions(n)
    fp = fixed_point_classes(n, field)
    Ys = {lam: solve_Y(lam, q_order, field, M).vector for lam in ps}
    for lam in ps:
        for mu in ps:
            got = pairing_hermitian(Ys[lam], Ys[mu], field)
            if lam == mu:
                want = pairing_hermitian(fp.classes[lam], fp.classes[lam], field)
            else:
                want = 0
            if not isinstance(got, QSeries):
                got = QSeries.constant(got, q_order, field)
            if got != QSeries.constant(want, q_order, field):
                return False
    return True


# --- the divisor line --------------------------------------------------------


def _rescaled_operator(M: FockOperator, c) -> FockOperator:
    return FockOperator(M.n, tuple(tuple(x.rescale(c) for x in row) for row in M.matrix), M.basis_label)


def divisor_consistency(R: RMatrix, name: str = "c") -> bool:
    """Rt(n, K, N)|_{q -> c q} equals the recursion rerun with M_D(c q), c formal.

    At the origin the divisor direction only moves q along q -> q e^t, so
    this is the symbolic content of the divisor equation for R.
    """
    base = R.field
    big = RationalFunctionField(tuple(base.names) + (name,))
    c = big.gen(name)
    M_big = FockOperator(
        R.n, tuple(tuple(x.map(lambda s: s.embed(big), big) for x in row) for row in R.eigen.M.matrix)
    )
    rerun = compute_R(R.n, R.z_order, R.q_order, big, M=_rescaled_operator(M_big, c))
    for k in range(R.z_order + 1):
        for i, row in enumerate(R.tilde[k]):
            for j, x in enumerate(row):
                lifted = x.map(lambda s: s.embed(big), big).rescale(c)
                if lifted != rerun.tilde[k][i][j]:
                    return False
    return True
