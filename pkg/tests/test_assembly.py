import itertools

import pytest

from conftest import F
from hilbgw.acceptance import genus1_closed_form
from hilbgw.assembly import CohFTData, GraphSumError, degree0_oracle, reconstruct_invariant, translation_T
from hilbgw.fock import three_point_series
from hilbgw.partitions import enumerate_partitions
from hilbgw.rmatrix import compute_R
from hilbgw.series import rational_reconstruct


@pytest.fixture(scope="module")
def R2():
    return compute_R(2, 5, 6)


@pytest.fixture(scope="module")
def data2(R2):
    return CohFTData(R2)


def test_genus_one_closed_form(R2, data2):
    inv = reconstruct_invariant(1, [[2]], R2, data2)
    assert inv.series == genus1_closed_form().taylor(6)
    assert rational_reconstruct(inv.series, 2) == genus1_closed_form()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_degree_zero_oracle(n):
    R = compute_R(n, 5, 1)
    data = CohFTData(R)
    for mu in enumerate_partitions(n):
        assert reconstruct_invariant(1, [mu], R, data).series.coeffs[0] == degree0_oracle(1, mu, n)
    assert reconstruct_invariant(2, [], R, data).series.coeffs[0] == degree0_oracle(2, None, n)


@pytest.mark.parametrize("n", [1, 2])
def test_degree_zero_vanishing(n):
    R = compute_R(n, 5, 1)
    data = CohFTData(R)
    ps = enumerate_partitions(n)
    for g, r in ((1, 2), (1, 3), (2, 1)):
        for ins in itertools.combinations_with_replacement(ps, r):
            assert not reconstruct_invariant(g, ins, R, data).series.coeffs[0]


def test_single_point_genus_two():
    # n = 1: only the constant map contributes
    t1, t2 = F.gen("t1"), F.gen("t2")
    R = compute_R(1, 5, 3)
    inv = reconstruct_invariant(2, [], R)
    assert inv.series.coeffs[0] == -(t1 + t2) / (t1 * t2 * 5760)
    assert all(not c for c in inv.series.coeffs[1:])


@pytest.mark.parametrize("n", [2, 3])
def test_genus_zero_three_point(n):
    R = compute_R(n, 2, 4)
    data = CohFTData(R)
    ps = enumerate_partitions(n)
    two = [2] + [1] * (n - 2)
    for a, b in itertools.combinations_with_replacement(ps, 2):
        got = reconstruct_invariant(0, [a, two, b], R, data).series
        assert got == three_point_series(a, b, n, 4)


def test_genus_one_string_equation(R2, data2):
    for mu in enumerate_partitions(2):
        assert reconstruct_invariant(1, [[1, 1], mu], R2, data2).series.is_zero()


def test_genus_zero_divisor_insertion():
    # (2) is minus the divisor, so adding it acts as -q d/dq
    R = compute_R(2, 3, 5)
    data = CohFTData(R)
    ps = enumerate_partitions(2)
    for a, b in itertools.combinations_with_replacement(ps, 2):
        three = reconstruct_invariant(0, [a, b, [2]], R, data).series
        four = reconstruct_invariant(0, [a, b, [2], [2]], R, data).series
        assert four == -three.q_derivative()


def test_genus_one_divisor_insertion(R2, data2):
    one = reconstruct_invariant(1, [[2]], R2, data2).series
    two = reconstruct_invariant(1, [[2], [2]], R2, data2).series
    assert two == -one.q_derivative()


def test_translation_starts_at_z_squared(R2):
    T = translation_T(R2)
    assert all(x.is_zero() for x in T[0]) and all(x.is_zero() for x in T[1])


def test_invariant_json(R2, data2):
    inv = reconstruct_invariant(1, [[2]], R2, data2)
    out = inv.to_json()
    assert out["insertions"] == [[2]] and len(out["coefficients"]) == 7


def test_z_order_too_small():
    R = compute_R(2, 1, 2)
    with pytest.raises(GraphSumError):
        reconstruct_invariant(1, [[2], [2]], R)


def test_input_validation(R2):
    with pytest.raises(ValueError):
        reconstruct_invariant(0, [[2]], R2)
    with pytest.raises(ValueError):
        reconstruct_invariant(1, [[3]], R2)
    with pytest.raises(ValueError):
        degree0_oracle(3, None, 2)
