from fractions import Fraction

import sympy
import pytest

from conftest import F
from hilbgw.acceptance import genus1_closed_form
from hilbgw.crepant import (
    anchor_comparison,
    crepant_substitute,
    hilb_sym_coincide_n1,
    mu_tilde_map,
    pairing_transport_check,
    roundtrip_check,
    sym_idempotent_gram,
    sym_idempotents,
)
from hilbgw.fock import eta_tilde
from hilbgw.partitions import enumerate_partitions, z_factor
from hilbgw.scalars import ExtensionField
from hilbgw.series import QPoly, QRational

E = ExtensionField(F)


def test_mu_tilde_factor():
    assert mu_tilde_map([1, 1]) == E.one
    # (-i)^{-1} = i and (-i)^{-2} = -1
    assert mu_tilde_map([2]) == E.i
    assert mu_tilde_map([3]) == E(-1)
    assert mu_tilde_map([2, 1]) == E.i


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pairing_transport(n):
    assert pairing_transport_check(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sym_idempotents_orthogonal(n):
    # orthogonality of characters makes the Sym idempotents eta~-orthogonal
    gram = sym_idempotent_gram(n)
    for (a, b), v in gram.items():
        if a != b:
            assert not v
        else:
            assert v


def test_sym_idempotent_coefficients():
    # characters of S_2: the sign representation is -1 on the transposition
    I = sym_idempotents(2)
    two, pair = enumerate_partitions(2)
    s = E.s
    assert I[two] == {two: s, pair: s**2}
    assert I[pair] == {two: -s, pair: s**2}


def test_eta_tilde_is_diagonal():
    ps = enumerate_partitions(3)
    for a in ps:
        for b in ps:
            if a != b:
                assert not eta_tilde(a, b)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_anchor_comparison(n):
    out = anchor_comparison(n, 4)
    assert out["equal"], out["mismatches"]


def test_single_point_anchors_coincide():
    assert hilb_sym_coincide_n1(6)


def _tan_half(k):
    """u^k coefficient of tan(u/2), from the Bernoulli expansion of tan."""
    if k % 2 == 0:
        return Fraction(0)
    m = (k + 1) // 2
    B = sympy.bernoulli(2 * m)
    c = (-1) ** (m - 1) * 2 ** (2 * m) * (2 ** (2 * m) - 1) * B / sympy.factorial(2 * m)
    return Fraction(str(c)) / 2**k


def test_genus_one_u_expansion():
    t1, t2 = F.gen("t1"), F.gen("t2")
    c = (t1 + t2) ** 2 / (t1 * t2)
    report = crepant_substitute(genus1_closed_form(), 6, 1, [[2]], 2)
    assert not report.pole_at_minus_one
    assert report.u_expansion[0] == E.zero
    # -(c/24)(1+q)/(1-q) at q = -e^{iu} is (i c / 24) tan(u/2)
    for k in range(7):
        assert report.u_expansion[k] == E.i * E(c) * _tan_half(k) / 24
    assert report.u_expansion[1] == E.i * E(c) / 48
    assert report.u_expansion[3] == E.i * E(c) / 576
    assert report.u_expansion[5] == E.i * E(c) / 5760
    # the insertion (2) carries the factor -i
    for a, b in zip(report.sym_prediction, report.u_expansion):
        assert a * mu_tilde_map([2]) == b


def test_roundtrip():
    report = crepant_substitute(genus1_closed_form(), 6, 1, [[2]], 2)
    assert roundtrip_check(report)


def test_pole_at_minus_one():
    rational = QRational(QPoly([F.one], F), QPoly([F.one, F.one], F))
    report = crepant_substitute(rational, 4)
    assert report.pole_at_minus_one
    assert report.u_expansion is None
    assert not roundtrip_check(report)
    assert report.to_json()["u_expansion"] is None


def test_report_json():
    out = crepant_substitute(genus1_closed_form(), 4, 1, [[2]], 2).to_json()
    assert out["insertions"] == [[2]] and len(out["u_expansion"]) == 5
