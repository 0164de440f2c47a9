import pytest

from conftest import F
from hilbgw.partitions import Partition, enumerate_partitions
from hilbgw.rmatrix import (
    anchor_check,
    compute_R,
    divisor_consistency,
    hilb_anchor,
    qde_residual_check,
    solve_Y,
    symplectic_check,
    y_pairing_check,
)
from hilbgw.jack import fixed_point_classes
from hilbgw.series import QSeries


@pytest.fixture(scope="module", params=[1, 2, 3])
def R(request):
    n = request.param
    return compute_R(n, 4 if n < 3 else 3, 5 if n < 3 else 3)


def test_anchor(R):
    assert anchor_check(R)


def test_symplectic_both_frames(R):
    assert symplectic_check(R, "flat")
    assert symplectic_check(R, "canonical")


def test_qde_residual(R):
    assert qde_residual_check(R)


def test_inverse_series(R):
    p = len(R.partitions)
    for k in range(R.z_order + 1):
        for a in range(p):
            for b in range(p):
                acc = QSeries.zero(R.q_order, F)
                for j in range(k + 1):
                    for c in range(p):
                        acc = acc + R.tilde[j][a][c] * R.tilde_inverse[k - j][c][b]
                want = QSeries.constant(1 if (k == 0 and a == b) else 0, R.q_order, F)
                assert acc == want


def test_unknown_basis(R):
    with pytest.raises(ValueError):
        R.coefficient(0, "bogus")


def test_single_point_is_constant_in_q():
    R = compute_R(1, 5, 6)
    closed = hilb_anchor(Partition([1]), 5, F)
    for k in range(6):
        entry = R.tilde[k][0][0]
        assert entry.coeffs[0] == closed.coeffs[k]
        assert all(not c for c in entry.coeffs[1:])


def test_anchor_low_orders():
    # z^1 coefficient is -(1/12) sum over tangent weights of 1/w
    s = hilb_anchor(Partition([1]), 3, F)
    t1, t2 = F.gen("t1"), F.gen("t2")
    assert s.coeffs[0] == 1
    assert s.coeffs[1] == -(t1.inverse() + t2.inverse()) / 12


def _doubled_anchor(lam, K, field):
    s = hilb_anchor(lam, K, field)
    cs = list(s.coeffs)
    cs[2] = cs[2] * 2
    return QSeries(cs, s.order, field, var="z")


def test_wrong_anchor_breaks_symplecticity():
    # the QDE alone does not see the anchor; symplecticity does
    R = compute_R(2, 4, 4, anchor=_doubled_anchor)
    assert qde_residual_check(R)
    assert not symplectic_check(R, "flat")
    assert not anchor_check(R)


def test_divisor_consistency():
    assert divisor_consistency(compute_R(2, 2, 3))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_y_pairing(n):
    assert y_pairing_check(n, 5)


def test_solve_Y_starts_at_fixed_point_class():
    fp = fixed_point_classes(2, F)
    for lam in enumerate_partitions(2):
        Y = solve_Y(lam, 4, F).vector
        for mu, c in Y.entries.items():
            assert c.coeffs[0] == fp.classes[lam].entries.get(mu, F.zero)
