import pytest

from conftest import F
from hilbgw.fock import FockVector, build_MD, divisor_vector, eta, pairing_eta, three_point_series, unit_vector
from hilbgw.frobenius import eigen_decompose, idempotents, quantum_mult_operator, tqft_correlator
from hilbgw.partitions import content_sum, enumerate_partitions, euler_class
from hilbgw.series import QSeries

N = 5


@pytest.fixture(scope="module", params=[1, 2, 3])
def eigen(request):
    return eigen_decompose(request.param, N)


def one():
    return QSeries.constant(1, N, F)


def test_eigenvalues_at_zero(eigen):
    for lam in eigen.partitions:
        assert eigen.eigenvalues[lam].coeffs[0] == -content_sum(lam)


def test_columns_are_eigenvectors(eigen):
    M = eigen.M.rows()
    p = len(eigen.partitions)
    for j, lam in enumerate(eigen.partitions):
        col = eigen.column(lam)
        for r in range(p):
            lhs = sum((M[r][s] * col[s] for s in range(p)), QSeries.zero(N, F))
            assert lhs == col[r] * eigen.eigenvalues[lam]


def test_columns_orthogonal(eigen):
    ps = eigen.partitions
    for a in ps:
        for b in ps:
            if a != b:
                value = pairing_eta(FockVector.from_coordinates(eigen.n, eigen.column(a)),
                                    FockVector.from_coordinates(eigen.n, eigen.column(b)))
                assert value.is_zero()


def test_delta_at_zero_is_euler_class(eigen):
    for lam in eigen.partitions:
        assert eigen.delta[lam].coeffs[0] == euler_class(lam)


def test_idempotents_sum_to_unit(eigen):
    eps, _ = idempotents(eigen)
    total = eps[0]
    for e in eps[1:]:
        total = total + e
    assert total == FockVector(eigen.n, {mu: c * one() for mu, c in unit_vector(eigen.n).entries.items()})


def test_idempotents_multiply(eigen):
    eps, delta = idempotents(eigen)
    for i, a in enumerate(eps):
        op = quantum_mult_operator(a, eigen)
        for j, b in enumerate(eps):
            image = op.apply(b)
            assert image == (a if i == j else FockVector(eigen.n, {}))
        assert pairing_eta(a, a) * delta[eigen.partitions[i]] == one()


def test_multiplication_by_divisor_and_unit(eigen):
    D = quantum_mult_operator(divisor_vector(eigen.n), eigen)
    assert D.matrix == tuple(tuple(x for x in row) for row in eigen.M.matrix) or eigen.n == 1
    U = quantum_mult_operator(unit_vector(eigen.n), eigen)
    p = len(eigen.partitions)
    for i in range(p):
        for j in range(p):
            assert U.matrix[i][j] == (one() if i == j else QSeries.zero(N, F))


def test_genus_zero_correlators(eigen):
    n = eigen.n
    ps = enumerate_partitions(n)
    unit = unit_vector(n)
    for a in ps:
        for b in ps:
            va, vb = FockVector.basis(a, F.one), FockVector.basis(b, F.one)
            assert tqft_correlator(0, [unit, va, vb], eigen) == QSeries.constant(eta(a, b), N, F)
            if n >= 2:
                two = FockVector.basis([2] + [1] * (n - 2), F.one)
                assert tqft_correlator(0, [va, two, vb], eigen) == three_point_series(a, b, n, N)


def test_unstable_correlator_rejected(eigen):
    with pytest.raises(ValueError):
        tqft_correlator(0, [unit_vector(eigen.n)], eigen)


def test_mismatched_operator_rejected():
    M = build_MD(2, 3)
    swapped = type(M)(2, (M.matrix[1], M.matrix[0]))
    with pytest.raises(AssertionError):
        eigen_decompose(2, 3, M=swapped)
