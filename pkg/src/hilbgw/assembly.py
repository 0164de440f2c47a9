"""Givental-Teleman reconstruction Omega = R T omega as a stable-graph sum.

Everything is written in the frame of the (unnormalized) idempotents eps_lam,
where the topological part is diagonal, omega_{g,r}(eps_lam, ...) = Delta_lam^{g-1},
the unit is (1, ..., 1) and eta^{-1} = diag(Delta).  The graph sum uses the
inverse matrix Rg = R^{-1}:

  leg        Rg(psi) v
  edge       (eta^{-1} - Rg(psi') eta^{-1} Rg(psi'')^T) / (psi' + psi'')
  vertex     sum_m 1/m! omega_{g, n+m}(..., T(psi_{n+1}), ..., T(psi_{n+m})),
             T(z) = z (1 - Rg(z) 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import factorial

from .fock import FockVector
from .frobenius import EigenData, idempotent_coordinates
from .graphs import StableGraph, enumerate_stable_graphs
from .intersection import hodge_integral, psi_integral
from .jack import restriction
from .partitions import as_partition, enumerate_partitions, tangent_weights
from .rmatrix import RMatrix
from .scalars import DEFAULT_FIELD, RationalFunctionField, Scalar
from .series import QRational, QSeries

__all__ = [
    "InvariantSeries",
    "GraphSumError",
    "CohFTData",
    "translation_T",
    "reconstruct_invariant",
    "degree0_oracle",
]


class GraphSumError(ArithmeticError):
    pass


@dataclass
class InvariantSeries:
    genus: int
    insertions: tuple
    n: int
    series: QSeries
    rational: QRational | None = None

    def to_json(self) -> dict:
        out = {
            "genus": self.genus,
            "insertions": [list(m) for m in self.insertions],
            "n": self.n,
            "q_order": self.series.order,
            "coefficients": [str(c) for c in self.series.coeffs],
        }
        if self.rational is not None:
            out["rational_form"] = {
                "numerator": [str(c) for c in self.rational.num.coeffs],
                "denominator": [str(c) for c in self.rational.den.coeffs],
                "text": str(self.rational),
            }
        return out


class CohFTData:
    """R^{-1}, T and the edge bivectors in the idempotent frame, prepared once per R."""

    def __init__(self, R: RMatrix):
        self.R = R
        self.eigen: EigenData = R.eigen
        self.field = R.field
        self.N = R.q_order
        self.K = R.z_order
        self.parts = R.partitions
        self.p = len(self.parts)
        a = [self.eigen.unit_coeffs[lam] for lam in self.parts]
        ainv = [x.inverse() for x in a]
        # Rg_eps = diag(1/a) Rt^{-1} diag(a)
        self.Rg = [
            [[ainv[i] * Sk[i][j] * a[j] for j in range(self.p)] for i in range(self.p)] for Sk in R.tilde_inverse
        ]
        self.delta = [self.eigen.delta[lam] for lam in self.parts]
        self._vertex_cache: dict = {}
        self._edge_cache: dict = {}

    def zero(self) -> QSeries:
        return QSeries.zero(self.N, self.field)

    @cached_property
    def T(self) -> list:
        """T[b][lam] for b = 0..K+1; T_0 = T_1 = 0 and T_{k+1} = -(Rg_k 1)."""
        out = [[self.zero()] * self.p, [self.zero()] * self.p]
        for k in range(1, self.K + 1):
            row = []
            for i in range(self.p):
                acc = self.zero()
                for j in range(self.p):
                    acc = acc + self.Rg[k][i][j]
                row.append(-acc)
            out.append(row)
        return out

    def leg_vector(self, x: list) -> list:
        """leg[k][lam] = (Rg_k x)_lam."""
        out = []
        for k in range(self.K + 1):
            row = []
            for i in range(self.p):
                acc = self.zero()
                for j in range(self.p):
                    if self.Rg[k][i][j] and x[j]:
                        acc = acc + self.Rg[k][i][j] * x[j]
                row.append(acc)
            out.append(row)
        return out

    def edge(self, a: int, b: int) -> list:
        """Coefficient of psi'^a psi''^b in the edge bivector, as a p x p matrix."""
        key = (a, b)
        if key in self._edge_cache:
            return self._edge_cache[key]
        if a + b + 1 > self.K:
            raise GraphSumError("z-order too small for the edge terms")
        # numerator N(x, y) = eta^{-1} - Rg(x) eta^{-1} Rg(y)^T;  N = (x + y) Q
        d = a + b

        def numer(i, j):
            if i == 0 and j == 0:
                return [[self.zero()] * self.p for _ in range(self.p)]
            Ri, Rj = self.Rg[i], self.Rg[j]
            out = []
            for l in range(self.p):
                row = []
                for m in range(self.p):
                    acc = self.zero()
                    for c in range(self.p):
                        if Ri[l][c] and Rj[m][c]:
                            acc = acc + Ri[l][c] * self.delta[c] * Rj[m][c]
                    row.append(-acc)
                out.append(row)
            return out

        Q = {}
        Q[(d, 0)] = numer(d + 1, 0)
        for bb in range(1, d + 1):
            Nab = numer(d + 1 - bb, bb)
            prev = Q[(d + 1 - bb, bb - 1)]
            Q[(d - bb, bb)] = [[Nab[l][m] - prev[l][m] for m in range(self.p)] for l in range(self.p)]
        last = numer(0, d + 1)
        if any(last[l][m] != Q[(0, d)][l][m] for l in range(self.p) for m in range(self.p)):
            raise GraphSumError("edge numerator is not divisible by psi' + psi''")
        for kk, v in Q.items():
            self._edge_cache[kk] = v
        return self._edge_cache[key]

    def vertex(self, g: int, lam: int, exps: tuple) -> QSeries:
        """sum_m 1/m! sum_{b_j >= 2} prod T_{b_j, lam} <tau_exps tau_b>_g, times Delta_lam^{g-1}."""
        exps = tuple(sorted(exps, reverse=True))
        key = (g, lam, exps)
        if key in self._vertex_cache:
            return self._vertex_cache[key]
        n = len(exps)
        total = self.zero()
        base = 3 * g - 3 + n - sum(exps)
        # each T insertion adds one point and at least 2 to the psi-degree: b - 1 >= 1 net
        m = 0
        while m <= base:
            budget = base + m  # sum of the b_j
            if 2 * m <= budget:
                for bs in _compositions_min(budget, m, 2):
                    if any(b > self.K + 1 for b in bs):
                        raise GraphSumError("z-order too small for the translation terms")
                    coeff = psi_integral(g, exps + bs)
                    if not coeff:
                        continue
                    term = QSeries.constant(1, self.N, self.field)
                    for b in bs:
                        term = term * self.T[b][lam]
                    total = total + term * (coeff / factorial(m))
            m += 1
        if g != 1:
            total = total * (self.delta[lam] ** (g - 1))
        self._vertex_cache[key] = total
        return total


def _compositions_min(total: int, parts: int, minimum: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions_min(total - first, parts - 1, minimum):
            yield (first,) + rest


def translation_T(R: RMatrix) -> list:
    """T(z) = z(1 - R^{-1}(z) 1) in the idempotent frame; entry [k][lam] is the z^k part."""
    return CohFTData(R).T


def _graph_contribution(data: CohFTData, graph: StableGraph, legs: list) -> QSeries:
    V = graph.num_vertices
    # half-edges: ('leg', i) or ('edge', e, end)
    half = [[] for _ in range(V)]
    for i, v in enumerate(graph.legs):
        half[v].append(("leg", i))
    for e, (u, w) in enumerate(graph.edges):
        half[u].append(("edge", e, 0))
        half[w].append(("edge", e, 1))
    dims = [3 * g - 3 + len(half[v]) for v, g in enumerate(graph.genera)]

    def exponent_choices(v):
        k = len(half[v])
        return [c for c in product(range(dims[v] + 1), repeat=k) if sum(c) <= dims[v]]

    choices = [exponent_choices(v) for v in range(V)]
    total = data.zero()
    for lams in product(range(data.p), repeat=V):
        for combo in product(*choices):
            exps_at = {}
            for v in range(V):
                for h, a in zip(half[v], combo[v]):
                    exps_at[h] = a
            term = None
            for v in range(V):
                val = data.vertex(graph.genera[v], lams[v], combo[v])
                if not val:
                    term = None
                    break
                term = val if term is None else term * val
            if term is None:
                continue
            for i, v in enumerate(graph.legs):
                c = legs[i][exps_at[("leg", i)]][lams[v]]
                term = term * c if c else None
                if term is None:
                    break
            if term is None:
                continue
            for e, (u, w) in enumerate(graph.edges):
                E = data.edge(exps_at[("edge", e, 0)], exps_at[("edge", e, 1)])
                c = E[lams[u]][lams[w]]
                if not c:
                    term = None
                    break
                term = term * c
            if term is None:
                continue
            total = total + term
    return total * Fraction(1, graph.automorphisms)


def reconstruct_invariant(
    g: int,
    insertions,
    R: RMatrix,
    data: CohFTData | None = None,
) -> InvariantSeries:
    """<mu^1, ..., mu^r>_g = sum_d <...>_{g,d} q^d from the graph sum."""
    ins = tuple(as_partition(m) for m in insertions)
    r = len(ins)
    if 2 * g - 2 + r <= 0:
        raise ValueError("unstable (g, r)")
    if any(m.size != R.n for m in ins):
        raise ValueError("insertions must be partitions of n")
    if R.z_order < 3 * g - 3 + r:
        raise GraphSumError("z-order below the dimension of the moduli space")
    data = data or CohFTData(R)
    legs = []
    for mu in ins:
        x = idempotent_coordinates(data.eigen, FockVector.basis(mu, data.field.one))
        legs.append(data.leg_vector(x))
    total = data.zero()
    for graph in enumerate_stable_graphs(g, r):
        total = total + _graph_contribution(data, graph, legs)
    return InvariantSeries(g, ins, R.n, total)


def degree0_oracle(g: int, insertion, n: int, field: RationalFunctionField | None = None) -> Scalar:
    """Degree-0 invariants by localization and Hodge integrals.

    g = 1:  <mu>_{1,0} = -(1/24) sum_eta mu|_eta sum_w 1/w.
    g = 2:  < >_{2,0} = sum_eta prod_w w * [deg 3 of prod_w (1 - lambda_1/w + lambda_2/w^2)],
            evaluated with the lambda_1^3 and lambda_1 lambda_2 integrals on Mbar_2.
    """
    field = field or DEFAULT_FIELD
    total = field.zero
    if g == 1:
        if insertion is None:
            raise ValueError("genus 1 needs one insertion")
        mu = as_partition(insertion)
        l1 = hodge_integral(1, "lambda1")
        for eta in enumerate_partitions(n):
            s = field.zero
            for w in tangent_weights(eta, field):
                s = s + w.inverse()
            total = total - restriction(mu, eta, field) * s * l1
        return total
    if g == 2:
        if insertion is not None:
            raise ValueError("genus 2 takes no insertion")
        l1_cubed = hodge_integral(2, "lambda1^3")
        l1l2 = hodge_integral(2, "lambda1*lambda2")
        for eta in enumerate_partitions(n):
            ws = tangent_weights(eta, field)
            xs = [w.inverse() for w in ws]
            e3 = field.zero
            for i in range(len(xs)):
                for j in range(i + 1, len(xs)):
                    for k in range(j + 1, len(xs)):
                        e3 = e3 + xs[i] * xs[j] * xs[k]
            mixed = field.zero
            for i in range(len(xs)):
                for j in range(len(xs)):
                    if i != j:
                        mixed = mixed + xs[i] * xs[j] * xs[j]
            euler = field.one
            for w in ws:
                euler = euler * w
            total = total + euler * (-e3 * l1_cubed - mixed * l1l2)
        return total
    raise ValueError("degree0_oracle supports g = 1, 2")
