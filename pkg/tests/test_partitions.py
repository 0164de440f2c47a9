from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import F, T1, T2
from hilbgw.bernoulli import bernoulli_number, bernoulli_polynomial, hodge_exponent_coefficient
from hilbgw.partitions import (
    Partition,
    arm_leg,
    as_partition,
    bernoulli_weight_sum,
    character,
    content_sum,
    dominates,
    enumerate_partitions,
    euler_class,
    hook_product,
    tangent_weights,
    z_factor,
)

partitions_up_to_7 = st.integers(1, 7).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


def test_partition_counts():
    assert [len(enumerate_partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_enumeration_order_starts_with_one_row():
    ps = enumerate_partitions(4)
    assert ps[0] == Partition([4]) and ps[-1] == Partition([1, 1, 1, 1])
    assert len(set(ps)) == len(ps)


def test_invalid_partition():
    with pytest.raises(ValueError):
        as_partition([1, 0])


@given(st.integers(1, 8))
def test_class_sizes_sum_to_one(n):
    assert sum(Fraction(1, z_factor(mu)) for mu in enumerate_partitions(n)) == 1


@given(partitions_up_to_7)
def test_conjugation_is_an_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


@given(partitions_up_to_7)
def test_tangent_weights_symmetric(lam):
    ws = sorted(map(str, tangent_weights(lam)))
    flipped = sorted(str(T1 + T2 - w) for w in tangent_weights(lam))
    assert ws == flipped


@given(partitions_up_to_7)
def test_euler_class_is_homogeneous_of_degree_2n(lam):
    assert euler_class(lam).total_degree() == 2 * lam.size


def test_small_tangent_weights():
    assert sorted(map(str, tangent_weights([1]))) == ["t1", "t2"]
    assert sorted(map(str, tangent_weights([2]))) == sorted(map(str, [2 * T1, T2 - T1, T1, T2]))
    assert sorted(map(str, tangent_weights([1, 1]))) == sorted(map(str, [2 * T2, T1 - T2, T1, T2]))
    assert euler_class([2]) == 2 * T1 * T1 * T2 * (T2 - T1)


def test_content_sum():
    assert content_sum([1]) == F.zero
    assert content_sum([2]) + content_sum([1, 1]) == T1 + T2
    assert content_sum([2, 1]) == T1 + T2


@given(partitions_up_to_7)
def test_content_sum_under_conjugation(lam):
    swapped = content_sum(lam).subs({"t1": T2, "t2": T1})
    assert swapped == content_sum(lam.conjugate())


def test_arm_leg_range():
    lam = Partition([3, 1])
    assert arm_leg(lam, (1, 1)) == (1, 2)
    with pytest.raises(ValueError):
        arm_leg(lam, (2, 2))


def test_character_table_s3():
    ps = enumerate_partitions(3)  # (3), (2,1), (1,1,1)
    table = [[character(lam, mu) for mu in ps] for lam in ps]
    assert table == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]


@given(partitions_up_to_7)
def test_dimension_is_hook_length(lam):
    n = lam.size
    assert character(lam, [1] * n) == factorial(n) // hook_product(lam)


@given(partitions_up_to_7)
def test_sign_character(lam):
    n = lam.size
    assert character([1] * n, lam) == (-1) ** (n - lam.length)
    assert character([n], lam) == 1


@given(st.integers(1, 5))
def test_character_orthogonality(n):
    ps = enumerate_partitions(n)
    for a in ps:
        for b in ps:
            assert sum(Fraction(character(a, mu) * character(b, mu), z_factor(mu)) for mu in ps) == (a == b)


def test_dominance():
    assert dominates([3], [2, 1]) and dominates([2, 1], [1, 1, 1])
    assert not dominates([2, 2], [3, 1])
    assert not dominates([3, 1, 1, 1], [2, 2, 2]) and not dominates([2, 2, 2], [3, 1, 1, 1])


# --- Bernoulli -----------------------------------------------------------------


def test_bernoulli_numbers():
    expected = [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42), 0, Fraction(-1, 30)]
    assert [bernoulli_number(m) for m in range(9)] == expected
    assert bernoulli_number(12) == Fraction(-691, 2730)


def test_hodge_exponent_coefficient():
    assert hodge_exponent_coefficient(1) == Fraction(1, 12)
    assert hodge_exponent_coefficient(2) == Fraction(-1, 360)


@given(st.integers(0, 8), st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_bernoulli_reflection(m, x):
    assert bernoulli_polynomial(m, 1 - x) == (-1) ** m * bernoulli_polynomial(m, x)


@given(st.integers(0, 8), st.integers(1, 6), st.fractions(min_value=-2, max_value=2, max_denominator=4))
def test_bernoulli_multiplication_theorem(m, r, x):
    lhs = sum(bernoulli_polynomial(m, x + Fraction(k, r)) for k in range(r))
    assert lhs == bernoulli_polynomial(m, r * x) / Fraction(r) ** (m - 1)


def test_bernoulli_polynomial_on_scalars():
    assert bernoulli_polynomial(2, T1) == T1 * T1 - T1 + Fraction(1, 6)


def test_bernoulli_weight_sum_single_box():
    # lam = (1): a = l = 0, weights -t1 and -t2
    assert bernoulli_weight_sum([1], 1) == -(T1.inverse() + T2.inverse())
    with pytest.raises(ValueError):
        bernoulli_weight_sum([1], 0)
