from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import F, T1, T2, nonzero_scalars, scalars
from hilbgw.scalars import ExtensionField, RationalFunctionField, Scalar, parse_scalar

s1, s2 = sympy.symbols("t1 t2")


def to_sympy(x: Scalar):
    return sympy.sympify(str(x).replace("^", "**"), locals={"t1": s1, "t2": s2})


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    assert a * 1 == a and a + 0 == a


@given(nonzero_scalars())
def test_inverse(a):
    assert a * a.inverse() == F.one
    assert a / a == F.one


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        F.one / F.zero


@given(scalars(), scalars())
def test_arithmetic_agrees_with_sympy(a, b):
    # sympy is an independent implementation of Q(t1, t2)
    assert sympy.simplify(to_sympy(a * b + a - b) - (to_sympy(a) * to_sympy(b) + to_sympy(a) - to_sympy(b))) == 0


@given(scalars())
def test_string_round_trip(a):
    assert parse_scalar(str(a)) == a


def test_canonical_form():
    x = (T1**2 - T2**2) / (T1 - T2)
    assert x == T1 + T2
    assert str(x) == "t1+t2"
    y = F(2) / (-4 * T1)
    assert str(y) == "(-1)/(2*t1)"
    assert str(F(Fraction(3, 6))) == "(1)/(2)"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_scalar("t1+*t2")
    with pytest.raises(ValueError):
        parse_scalar("t3")


@given(scalars())
def test_bar_is_involution(a):
    assert a.bar().bar() == a


def test_bar_on_generators():
    assert (T1 + 2 * T2).bar() == -(T1 + 2 * T2)
    assert (T1 * T2).bar() == T1 * T2


def test_subs_and_embed():
    x = (T1 + T2) / (T1 * T2)
    assert x.subs({"t1": 1, "t2": 2}) == F(Fraction(3, 2))
    big = RationalFunctionField(("t1", "t2", "c"))
    assert x.embed(big) * big.gen("c") == x.embed(big) * big.gen("c")
    with pytest.raises(ValueError):
        big.gen("c").embed(F)


def test_field_mismatch():
    other = RationalFunctionField(("q", "t"))
    with pytest.raises(TypeError):
        T1 + other.gen("q")


def test_extension_relations():
    E = ExtensionField(F)
    assert E.i * E.i == E(-1)
    assert E.s * E.s == E(T1 * T2)
    assert (E.i * E.s) * (E.i * E.s) == E(-T1 * T2)
    x = E(T1) + E.i * E(T2) + E.s
    assert x * x.inverse() == E.one


def test_extension_projection():
    E = ExtensionField(F)
    assert (E.i * E.i).project() == F(-1)
    with pytest.raises(ValueError):
        E.i.project()


@given(scalars(), scalars())
def test_extension_conjugation(a, b):
    E = ExtensionField(F)
    z = E(a) + E.i * E(b)
    assert (z * z.conjugate_i()).is_base()
