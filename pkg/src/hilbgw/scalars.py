"""Exact scalars: rational functions in the equivariant parameters.

``Scalar`` is an element of Q(x_1, ..., x_k) for a fixed tuple of variable
names (by default ``("t1", "t2")``).  Numerator and denominator are sparse
integer polynomials in graded-lex order (FLINT ``fmpz_mpoly``).  Every
operation reduces by the polynomial gcd, so the stored pair is canonical:

* gcd(num, den) = 1 (this includes the integer content),
* the leading coefficient of ``den`` is positive.

Equality is therefore structural.  ``ExtScalar`` adjoins i (i^2 = -1) and a
formal s with s^2 = t1*t2 by storing four coordinates over the base field.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Integral, Rational as _RationalABC
from typing import Iterable, Mapping, Sequence

import flint

Rational = Fraction

__all__ = [
    "Rational",
    "RationalFunctionField",
    "Scalar",
    "ExtensionField",
    "ExtScalar",
    "DEFAULT_FIELD",
    "t1",
    "t2",
    "parse_scalar",
]


class RationalFunctionField:
    """The field Q(names).  One instance per tuple of names."""

    _instances: dict[tuple[str, ...], "RationalFunctionField"] = {}

    def __new__(cls, names: Sequence[str] = ("t1", "t2")):
        key = tuple(names)
        inst = cls._instances.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst.names = key
            inst.ctx = flint.fmpz_mpoly_ctx.get(key, "deglex")
            inst._one_poly = inst.ctx.from_dict({(0,) * len(key): 1})
            inst._zero_poly = inst.ctx.from_dict({})
            inst.zero = Scalar._raw(inst, inst._zero_poly, inst._one_poly)
            inst.one = Scalar._raw(inst, inst._one_poly, inst._one_poly)
            cls._instances[key] = inst
        return inst

    def __repr__(self) -> str:
        return f"RationalFunctionField({self.names!r})"

    def __reduce__(self):
        return (RationalFunctionField, (self.names,))

    def gen(self, name: str) -> "Scalar":
        idx = self.names.index(name)
        exps = [0] * len(self.names)
        exps[idx] = 1
        return Scalar._raw(self, self.ctx.from_dict({tuple(exps): 1}), self._one_poly)

    def gens(self) -> tuple["Scalar", ...]:
        return tuple(self.gen(n) for n in self.names)

    def _const_poly(self, c: int):
        return self.ctx.from_dict({(0,) * len(self.names): int(c)}) if c else self._zero_poly

    def __call__(self, x) -> "Scalar":
        if isinstance(x, Scalar):
            if x.field is self:
                return x
            return x.embed(self)
        if isinstance(x, Integral):
            return Scalar._raw(self, self._const_poly(int(x)), self._one_poly)
        if isinstance(x, _RationalABC):
            x = Fraction(x)
            return Scalar._raw(self, self._const_poly(x.numerator), self._const_poly(x.denominator))
        if isinstance(x, str):
            return parse_scalar(x, self)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def fraction(self, num: int, den: int = 1) -> "Scalar":
        return self(Fraction(num, den))

    def from_polys(self, num, den=None) -> "Scalar":
        if den is None:
            den = self._one_poly
        return Scalar._make(self, num, den)


def _normalize(num, den):
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return num, den.context().from_dict({(0,) * den.context().nvars(): 1})
    if not den.is_one():
        g = num.gcd(den)
        if not g.is_one():
            num = num // g
            den = den // g
        if den.leading_coefficient() < 0:
            num, den = -num, -den
    return num, den


class Scalar:
    """An element of a ``RationalFunctionField``; immutable."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, value=0, field: RationalFunctionField | None = None):
        field = field or DEFAULT_FIELD
        s = field(value)
        self.field, self.num, self.den, self._hash = s.field, s.num, s.den, None

    @classmethod
    def _raw(cls, field, num, den) -> "Scalar":
        obj = object.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, field, num, den) -> "Scalar":
        num, den = _normalize(num, den)
        return cls._raw(field, num, den)

    # coercion
    def _coerce(self, other) -> "Scalar | None":
        if isinstance(other, Scalar):
            if other.field is self.field:
                return other
            raise TypeError(f"field mismatch: {self.field!r} vs {other.field!r}")
        if isinstance(other, (Integral, _RationalABC)):
            return self.field(other)
        return None

    # arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return Scalar._raw(self.field, a + c, b)
        if b == d:
            return Scalar._make(self.field, a + c, b)
        g = b.gcd(d)
        if g.is_one():
            num = a * d + c * b
            if num.is_zero():
                return self.field.zero
            return Scalar._raw(self.field, num, b * d)
        b1, d1 = b // g, d // g
        num = a * d1 + c * b1
        den = b1 * d
        g2 = num.gcd(g)
        if not g2.is_one():
            num, den = num // g2, den // g2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        if num.is_zero():
            return self.field.zero
        return Scalar._raw(self.field, num, den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.field, -self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Integral):
            if other == 0:
                return self.field.zero
            if other == 1:
                return self
            if self.den.is_one():
                return Scalar._raw(self.field, self.num * int(other), self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return self.field.zero
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return Scalar._raw(self.field, a * c, b)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a // g1, d // g1
        if not g2.is_one():
            c, b = c // g2, b // g2
        num, den = a * c, b * d
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Scalar._raw(self.field, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Scalar._raw(self.field, num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, Integral):
            return NotImplemented
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return self.field.one
        return Scalar._raw(self.field, self.num ** k, self.den ** k)

    # comparison and hashing
    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return other.field is self.field and self.num == other.num and self.den == other.den
        if isinstance(other, (Integral, _RationalABC)):
            return self == self.field(other)
        return NotImplemented

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((self.field.names, str(self.num), str(self.den)))
        return self._hash

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # queries
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        n = int(self.num.leading_coefficient()) if not self.num.is_zero() else 0
        return Fraction(n, int(self.den.leading_coefficient()))

    def total_degree(self) -> int:
        """deg(num) - deg(den); meaningful for homogeneous values."""
        if self.num.is_zero():
            raise ValueError("degree of zero")
        return self.num.total_degree() - self.den.total_degree()

    # substitutions
    def bar(self) -> "Scalar":
        """The involution x_i -> -x_i on all variables."""
        gens = self.field.ctx.gens()
        neg = [-g for g in gens]
        return Scalar._make(self.field, self.num.compose(*neg), self.den.compose(*neg))

    def embed(self, target: RationalFunctionField) -> "Scalar":
        """Map into a field whose variable names contain ours."""
        if target is self.field:
            return self
        missing = set(self.field.names) - set(target.names)
        if missing:
            raise ValueError(f"cannot embed: {sorted(missing)} absent from target")
        return Scalar._raw(
            target, self.num.project_to_context(target.ctx), self.den.project_to_context(target.ctx)
        )

    def subs(self, values: Mapping[str, object], target: RationalFunctionField | None = None) -> "Scalar":
        """Evaluate at ``values`` (name -> element of ``target``); unlisted names map to themselves."""
        target = target or self.field
        point = []
        for name in self.field.names:
            if name in values:
                point.append(target(values[name]))
            else:
                point.append(target.gen(name))
        return _eval_poly(self.num, point, target) / _eval_poly(self.den, point, target)

    def monomials(self, which: str = "num") -> dict[tuple[int, ...], int]:
        poly = self.num if which == "num" else self.den
        return {tuple(int(e) for e in m): int(c) for m, c in zip(poly.monoms(), poly.coeffs())}

    def __str__(self) -> str:
        names = self.field.names
        p = _format_poly(self.num, names)
        if self.den.is_one():
            return p
        return f"({p})/({_format_poly(self.den, names)})"

    def __repr__(self) -> str:
        return f"Scalar('{self}')"


def _eval_poly(poly, point: list[Scalar], field: RationalFunctionField) -> Scalar:
    total = field.zero
    powers: list[dict[int, Scalar]] = [{0: field.one} for _ in point]

    def pw(i: int, e: int) -> Scalar:
        cache = powers[i]
        if e not in cache:
            cache[e] = point[i] ** e
        return cache[e]

    for mono, coeff in zip(poly.monoms(), poly.coeffs()):
        term = field(int(coeff))
        for i, e in enumerate(mono):
            if e:
                term = term * pw(i, int(e))
        total = total + term
    return total


def _format_poly(poly, names: Sequence[str]) -> str:
    if poly.is_zero():
        return "0"
    out = []
    for mono, coeff in zip(poly.monoms(), poly.coeffs()):
        c = int(coeff)
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{int(e)}")
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        out.append((sign, body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += sign + body
    return s


_TERM = re.compile(r"([+-]?)([^+-]+)")


def _parse_poly(text: str, field: RationalFunctionField):
    text = text.replace(" ", "")
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    nv = len(field.names)
    terms: dict[tuple[int, ...], int] = {}
    pos = 0
    for m in _TERM.finditer(text):
        if m.start() != pos:
            raise ValueError(f"malformed polynomial: {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = 1
        exps = [0] * nv
        for factor in m.group(2).split("*"):
            if not factor:
                raise ValueError(f"malformed polynomial: {text!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in field.names:
                raise ValueError(f"unknown variable {name!r}")
            exps[field.names.index(name)] += int(power) if power else 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + sign * coeff
    if pos != len(text):
        raise ValueError(f"malformed polynomial: {text!r}")
    return field.ctx.from_dict({k: v for k, v in terms.items() if v})


def parse_scalar(text: str, field: RationalFunctionField | None = None) -> Scalar:
    """Inverse of ``str(Scalar)``: accepts ``P`` or ``(P)/(Q)``."""
    field = field or DEFAULT_FIELD
    text = text.strip()
    depth = 0
    split = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            split = i
    if split is None:
        return field.from_polys(_parse_poly(text, field))
    return field.from_polys(_parse_poly(text[:split], field), _parse_poly(text[split + 1 :], field))


DEFAULT_FIELD = RationalFunctionField(("t1", "t2"))
t1, t2 = DEFAULT_FIELD.gens()


# --- extensions -----------------------------------------------------------


class ExtensionField:
    """Base field adjoined with i (i^2 = -1) and s (s^2 = t1*t2).

    Elements are a + b*i + c*s + d*i*s with a, b, c, d in the base field.
    """

    _instances: dict = {}

    def __new__(cls, base: RationalFunctionField | None = None, gaussian: bool = True, sqrt_t1t2: bool = True):
        base = base or DEFAULT_FIELD
        key = (base.names, gaussian, sqrt_t1t2)
        inst = cls._instances.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst.base = base
            inst.gaussian = gaussian
            inst.sqrt_t1t2 = sqrt_t1t2
            inst.s_squared = base.gen("t1") * base.gen("t2")
            z, o = base.zero, base.one
            inst.zero = ExtScalar._raw(inst, (z, z, z, z))
            inst.one = ExtScalar._raw(inst, (o, z, z, z))
            inst.i = ExtScalar._raw(inst, (z, o, z, z)) if gaussian else None
            inst.s = ExtScalar._raw(inst, (z, z, o, z)) if sqrt_t1t2 else None
            cls._instances[key] = inst
        return inst

    def __repr__(self) -> str:
        return f"ExtensionField(gaussian={self.gaussian}, sqrt_t1t2={self.sqrt_t1t2})"

    def __call__(self, x) -> "ExtScalar":
        if isinstance(x, ExtScalar):
            if x.field is not self:
                raise TypeError("extension field mismatch")
            return x
        z = self.base.zero
        return ExtScalar._raw(self, (self.base(x), z, z, z))


class ExtScalar:
    __slots__ = ("field", "coords")

    @classmethod
    def _raw(cls, field: ExtensionField, coords: tuple) -> "ExtScalar":
        obj = object.__new__(cls)
        obj.field = field
        obj.coords = coords
        return obj

    def _coerce(self, other):
        if isinstance(other, ExtScalar):
            if other.field is not self.field:
                raise TypeError("extension field mismatch")
            return other
        if isinstance(other, (Scalar, Integral, _RationalABC)):
            return self.field(other)
        return None

    def _check(self, coords):
        f = self.field
        if not f.gaussian and (coords[1] or coords[3]):
            raise ValueError("i used in a field without the gaussian extension")
        if not f.sqrt_t1t2 and (coords[2] or coords[3]):
            raise ValueError("sqrt(t1*t2) used in a field without that extension")
        return ExtScalar._raw(f, coords)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtScalar._raw(self.field, tuple(x + y for x, y in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return ExtScalar._raw(self.field, tuple(-x for x in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (Scalar, Integral, _RationalABC)):
            return ExtScalar._raw(self.field, tuple(x * other for x in self.coords))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.coords
        e, f, g, h = o.coords
        S = self.field.s_squared
        one = a * e - b * f + S * (c * g - d * h)
        i_ = a * f + b * e + S * (c * h + d * g)
        s_ = a * g + c * e - (b * h + d * f)
        is_ = a * h + d * e + b * g + c * f
        return self._check((one, i_, s_, is_))

    __rmul__ = __mul__

    def _conj_s(self):
        a, b, c, d = self.coords
        return ExtScalar._raw(self.field, (a, b, -c, -d))

    def inverse(self) -> "ExtScalar":
        # multiply by the s-conjugate to land in base(i), then by the i-conjugate
        m = self * self._conj_s()
        a, b, _, _ = m.coords
        norm = a * a + b * b
        if norm.is_zero():
            raise ZeroDivisionError("inverse of zero")
        z = self.field.base.zero
        inv_m = ExtScalar._raw(self.field, (a / norm, -b / norm, z, z))
        return self._conj_s() * inv_m

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(bool(x) for x in self.coords)

    def is_zero(self) -> bool:
        return not self

    def is_base(self) -> bool:
        return not any(self.coords[1:])

    def project(self) -> Scalar:
        """Lossless projection to the base field; asserts zero extension coordinates."""
        if not self.is_base():
            raise ValueError(f"{self} has nonzero extension coordinates")
        return self.coords[0]

    def conjugate_i(self) -> "ExtScalar":
        a, b, c, d = self.coords
        return ExtScalar._raw(self.field, (a, -b, c, -d))

    def __str__(self) -> str:
        labels = ("", "i", "s", "i*s")
        parts = []
        for lab, x in zip(labels, self.coords):
            if x:
                parts.append(f"({x})" + (f"*{lab}" if lab else ""))
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"ExtScalar({self})"

    def to_json(self) -> dict:
        return {k: str(x) for k, x in zip(("1", "i", "s", "i*s"), self.coords) if x}


def scalar_sum(items: Iterable, zero):
    total = zero
    for x in items:
        total = total + x
    return total
