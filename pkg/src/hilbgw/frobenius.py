"""The small quantum ring at the origin as a Frobenius algebra over Q(t1,t2)[[q]].

Everything is generated by M_D.  Its eigenvectors are computed by
perturbation theory in q around the fixed-point basis, where M_D(0) is
diagonal with entries -c(lambda).  Idempotents are the eigenvectors rescaled
so that they sum to the unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .fock import FockOperator, FockVector, build_MD, eta, unit_vector
from .jack import fixed_point_classes
from .linalg import (
    mat_mul,
    matrix_inverse,
    series_matrix,
    series_matrix_coefficient,
    series_matrix_inverse,
    transpose,
)
from .partitions import Partition, as_partition, content_sum, enumerate_partitions
from .scalars import DEFAULT_FIELD, RationalFunctionField
from .series import QSeries

__all__ = [
    "EigenData",
    "ResonanceError",
    "eigen_decompose",
    "quantum_mult_operator",
    "idempotents",
    "tqft_correlator",
    "idempotent_coordinates",
]


class ResonanceError(ArithmeticError):
    pass


@dataclass(frozen=True, eq=False)
class EigenData:
    """Perturbative spectral data of M_D(q).

    ``psi`` has columns f_lam with f_lam(0) = J^lam and f_lam's own
    J^lam-coordinate fixed to 1 at every order.  ``unit_coeffs`` are the
    a_lam with 1 = sum a_lam f_lam, so eps_lam = a_lam f_lam.
    """

    n: int
    q_order: int
    field: RationalFunctionField
    partitions: tuple
    M: FockOperator
    eigenvalues: dict
    psi: list
    norms: dict  # eta(f_lam, f_lam)
    unit_coeffs: dict
    delta: dict  # 1 / eta(eps_lam, eps_lam)

    @cached_property
    def gram(self) -> list:
        ps = self.partitions
        return [[eta(a, b, self.field) for b in ps] for a in ps]

    def column(self, lam) -> list[QSeries]:
        j = self.partitions.index(as_partition(lam))
        return [row[j] for row in self.psi]

    def idempotent(self, lam) -> FockVector:
        lam = as_partition(lam)
        a = self.unit_coeffs[lam]
        return FockVector.from_coordinates(self.n, [x * a for x in self.column(lam)])

    @cached_property
    def psi_inverse(self) -> list:
        """F^{-1} = H^{-1} F^T G, using eta-orthogonality of the columns."""
        ps = self.partitions
        out = []
        for i, lam in enumerate(ps):
            hinv = self.norms[lam].inverse()
            row = []
            for j, mu in enumerate(ps):
                row.append(self.psi[j][i] * self.gram[j][j] * hinv)
            out.append(row)
        return out

    def coordinates(self, v: FockVector) -> list[QSeries]:
        zero = QSeries.zero(self.q_order, self.field)
        out = []
        for mu in self.partitions:
            c = v.entries.get(mu)
            if c is None:
                out.append(zero)
            elif isinstance(c, QSeries):
                out.append(c)
            else:
                out.append(QSeries.constant(c, self.q_order, self.field))
        return out


def eigen_decompose(
    n: int,
    q_order: int,
    field: RationalFunctionField | None = None,
    M: FockOperator | None = None,
) -> EigenData:
    field = field or DEFAULT_FIELD
    M = M or build_MD(n, q_order, field)
    ps = enumerate_partitions(n)
    p = len(ps)
    fp = fixed_point_classes(n, field)
    T, Tinv = fp.transition, fp.inverse
    B = [mat_mul(Tinv, mat_mul(M.coefficient(k), T)) for k in range(q_order + 1)]
    diag0 = [-content_sum(lam, field) for lam in ps]
    for i in range(p):
        for j in range(p):
            want = diag0[i] if i == j else field.zero
            if B[0][i][j] != want:
                raise AssertionError("M_D(0) is not diagonal in the fixed-point basis")

    eigenvalues = {}
    W = [[[field.zero] * p for _ in range(p)] for _ in range(q_order + 1)]
    for lam_i in range(p):
        d = [diag0[lam_i]]
        w = [[field.one if r == lam_i else field.zero for r in range(p)]]
        for k in range(1, q_order + 1):
            Bw = [field.zero] * p
            for j in range(1, k + 1):
                for r in range(p):
                    acc = field.zero
                    for s in range(p):
                        if B[j][r][s] and w[k - j][s]:
                            acc = acc + B[j][r][s] * w[k - j][s]
                    Bw[r] = Bw[r] + acc
            dk = Bw[lam_i]
            d.append(dk)
            wk = []
            for r in range(p):
                if r == lam_i:
                    wk.append(field.zero)
                    continue
                gap = diag0[r] - d[0]
                if gap.is_zero():
                    raise ResonanceError("eigenvalue collision at q = 0")
                acc = field.zero
                for j in range(1, k + 1):
                    if d[j] and w[k - j][r]:
                        acc = acc + d[j] * w[k - j][r]
                wk.append((acc - Bw[r]) / gap)
            w.append(wk)
        eigenvalues[ps[lam_i]] = QSeries(d, q_order, field)
        for k in range(q_order + 1):
            for r in range(p):
                W[k][r][lam_i] = w[k][r]

    psi_coeffs = [mat_mul(T, W[k]) for k in range(q_order + 1)]
    psi = series_matrix(psi_coeffs, q_order, field)

    G = [eta(mu, mu, field) for mu in ps]
    unit_idx = ps.index(Partition([1] * n))
    norms, unit_coeffs, delta = {}, {}, {}
    for j, lam in enumerate(ps):
        col = [psi[r][j] for r in range(p)]
        h = QSeries.zero(q_order, field)
        for r in range(p):
            h = h + col[r] * col[r] * G[r]
        norms[lam] = h
        a = col[unit_idx] * G[unit_idx] / h
        unit_coeffs[lam] = a
        delta[lam] = (a * a * h).inverse()
    return EigenData(n, q_order, field, ps, M, eigenvalues, psi, norms, unit_coeffs, delta)


def idempotents(eigen: EigenData) -> tuple[list[FockVector], dict]:
    return [eigen.idempotent(lam) for lam in eigen.partitions], dict(eigen.delta)


def idempotent_coordinates(eigen: EigenData, v: FockVector) -> list[QSeries]:
    """x_lam with v = sum_lam x_lam eps_lam."""
    coords = eigen.coordinates(v)
    out = []
    for i, lam in enumerate(eigen.partitions):
        acc = QSeries.zero(eigen.q_order, eigen.field)
        for j in range(len(coords)):
            if not coords[j].is_zero():
                acc = acc + eigen.psi_inverse[i][j] * coords[j]
        out.append(acc / eigen.unit_coeffs[lam])
    return out


def _apply(Mrows, vec):
    out = []
    for row in Mrows:
        acc = None
        for a, b in zip(row, vec):
            if a.is_zero() or b.is_zero():
                continue
            acc = a * b if acc is None else acc + a * b
        out.append(acc if acc is not None else vec[0] * 0)
    return out


def quantum_mult_operator(v: FockVector, eigen: EigenData) -> FockOperator:
    """Matrix of a -> v * a, from powers of M_D applied to the unit."""
    p = len(eigen.partitions)
    Mrows = eigen.M.rows()
    krylov = [eigen.coordinates(unit_vector(eigen.n, eigen.field))]
    for _ in range(1, p):
        krylov.append(_apply(Mrows, krylov[-1]))
    K = transpose(krylov)  # columns D^k * 1
    Kinv = series_matrix_inverse(K, eigen.field)
    c = _apply(Kinv, eigen.coordinates(v))
    zero = QSeries.zero(eigen.q_order, eigen.field)
    one = QSeries.constant(1, eigen.q_order, eigen.field)
    result = [[c[0] if i == j else zero for j in range(p)] for i in range(p)]
    power = [[one if i == j else zero for j in range(p)] for i in range(p)]
    for k in range(1, p):
        power = mat_mul(Mrows, power)
        result = [[result[i][j] + power[i][j] * c[k] for j in range(p)] for i in range(p)]
    return FockOperator(eigen.n, tuple(tuple(r) for r in result))


def tqft_correlator(g: int, insertions: list[FockVector], eigen: EigenData) -> QSeries:
    """omega_{g,r}(v_1, ..., v_r) = sum_lam prod_i x_{i,lam} Delta_lam^{g-1}."""
    if 2 * g - 2 + len(insertions) <= 0:
        raise ValueError("unstable (g, r)")
    coords = [idempotent_coordinates(eigen, v) for v in insertions]
    total = QSeries.zero(eigen.q_order, eigen.field)
    for i, lam in enumerate(eigen.partitions):
        term = eigen.delta[lam] ** (g - 1)
        for c in coords:
            term = term * c[i]
        total = total + term
    return total
