"""Truncated power series, polynomials in q, and Pade-style rational reconstruction."""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational as _RationalABC
from typing import Callable, Sequence

from .scalars import DEFAULT_FIELD, Scalar

__all__ = [
    "QSeries",
    "QPoly",
    "QRational",
    "series_exp",
    "series_log",
    "rational_reconstruct",
    "ReconstructionError",
    "InsufficientCoefficientsError",
    "NoRationalFormError",
]


def _is_plain_number(x) -> bool:
    return isinstance(x, (Integral, _RationalABC))


class QSeries:
    """sum_{k=0}^{order} c_k q^k, truncated at ``order``.

    Coefficients live in ``field`` (anything with ``zero``, ``one`` and a
    coercing ``__call__``).  Binary operations on operands of different
    order truncate to the smaller one.
    """

    __slots__ = ("coeffs", "order", "field", "var")

    def __init__(self, coeffs: Sequence, order: int, field=None, var: str = "q"):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        field = field or DEFAULT_FIELD
        cs = [field(c) for c in list(coeffs)[: order + 1]]
        cs.extend([field.zero] * (order + 1 - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order
        self.field = field
        self.var = var

    @classmethod
    def _raw(cls, coeffs: tuple, order: int, field, var: str = "q") -> "QSeries":
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        obj.order = order
        obj.field = field
        obj.var = var
        return obj

    @classmethod
    def constant(cls, c, order: int, field=None, var: str = "q") -> "QSeries":
        field = field or DEFAULT_FIELD
        return cls([field(c)], order, field, var)

    @classmethod
    def zero(cls, order: int, field=None, var: str = "q") -> "QSeries":
        return cls([], order, field or DEFAULT_FIELD, var)

    @classmethod
    def monomial(cls, k: int, order: int, c=1, field=None, var: str = "q") -> "QSeries":
        field = field or DEFAULT_FIELD
        cs = [field.zero] * (order + 1)
        if k <= order:
            cs[k] = field(c)
        return cls(cs, order, field, var)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int) -> "QSeries":
        if order >= self.order:
            return self
        return QSeries._raw(self.coeffs[: order + 1], order, self.field, self.var)

    def _lift(self, other) -> "QSeries | None":
        if isinstance(other, QSeries):
            return other
        try:
            c = self.field(other)
        except TypeError:
            return None
        return QSeries._raw((c,) + (self.field.zero,) * self.order, self.order, self.field, self.var)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return QSeries._raw(tuple(self.coeffs[k] + o.coeffs[k] for k in range(n + 1)), n, self.field, self.var)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw(tuple(-c for c in self.coeffs), self.order, self.field, self.var)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "QSeries":
        if not isinstance(c, QSeries):
            return QSeries._raw(tuple(x * c for x in self.coeffs), self.order, self.field, self.var)
        return self * c

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            try:
                c = self.field(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        zero = self.field.zero
        nz_a = [i for i in range(n + 1) if a[i]]
        nz_b = [j for j in range(n + 1) if b[j]]
        out = [zero] * (n + 1)
        for i in nz_a:
            ai = a[i]
            for j in nz_b:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + ai * b[j]
        return QSeries._raw(tuple(out), n, self.field, self.var)

    def __rmul__(self, other):
        return self.__mul__(other)

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def inverse(self) -> "QSeries":
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / c0 if not hasattr(c0, "inverse") else c0.inverse()
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = self.field.zero
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    acc = acc + self.coeffs[j] * out[k - j]
            out.append(-(acc * inv0))
        return QSeries._raw(tuple(out), self.order, self.field, self.var)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        c = self.field(other)
        return self.scale(1 / c if not hasattr(c, "inverse") else c.inverse())

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries.constant(1, self.order, self.field, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QSeries):
            n = min(self.order, other.order)
            return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self == o

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_constant(self) -> bool:
        return not any(self.coeffs[1:])

    def q_derivative(self) -> "QSeries":
        """q d/dq."""
        return QSeries._raw(tuple(c * k for k, c in enumerate(self.coeffs)), self.order, self.field, self.var)

    def q_integrate(self, constant=0) -> "QSeries":
        """Inverse of q d/dq; the integrand must have zero constant term."""
        if self.coeffs[0]:
            raise ValueError("q-integration of a series with nonzero constant term")
        cs = [self.field(constant)] + [c * Fraction(1, k) for k, c in enumerate(self.coeffs) if k > 0]
        return QSeries._raw(tuple(cs), self.order, self.field, self.var)

    def rescale(self, c) -> "QSeries":
        """The substitution q -> c*q."""
        c = self.field(c)
        out, p = [], self.field.one
        for x in self.coeffs:
            out.append(x * p)
            p = p * c
        return QSeries._raw(tuple(out), self.order, self.field, self.var)

    def map(self, fn: Callable, field=None) -> "QSeries":
        field = field or self.field
        return QSeries._raw(tuple(fn(c) for c in self.coeffs), self.order, field, self.var)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"({c})*{self.var}^{k}" if k else f"({c})")
        return (" + ".join(terms) or "0") + f" + O({self.var}^{self.order + 1})"

    __str__ = __repr__


def series_exp(s: QSeries) -> QSeries:
    """exp(s) for s with zero constant term."""
    if s.coeffs[0]:
        raise ValueError("series_exp needs a zero constant term")
    n = s.order
    out = [s.field.one]
    for k in range(1, n + 1):
        acc = s.field.zero
        for j in range(1, k + 1):
            if s.coeffs[j]:
                acc = acc + s.coeffs[j] * out[k - j] * j
        out.append(acc * Fraction(1, k))
    return QSeries._raw(tuple(out), n, s.field, s.var)


def series_log(s: QSeries) -> QSeries:
    """log(s) for s with constant term 1."""
    if s.coeffs[0] != 1:
        raise ValueError("series_log needs constant term 1")
    n = s.order
    out = [s.field.zero]
    for k in range(1, n + 1):
        acc = s.coeffs[k] * k
        for j in range(1, k):
            if out[j] and s.coeffs[k - j]:
                acc = acc - out[j] * s.coeffs[k - j] * j
        out.append(acc * Fraction(1, k))
    return QSeries._raw(tuple(out), n, s.field, s.var)


# --- polynomials in q -----------------------------------------------------


class QPoly:
    """Dense univariate polynomial over a field, lowest degree first."""

    __slots__ = ("coeffs", "field", "var")

    def __init__(self, coeffs: Sequence, field=None, var: str = "q"):
        field = field or DEFAULT_FIELD
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field
        self.var = var

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "QPoly") -> "QPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return QPoly([x + y for x, y in zip(a, b)], self.field, self.var)

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs], self.field, self.var)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            return QPoly([c * other for c in self.coeffs], self.field, self.var)
        if self.is_zero() or other.is_zero():
            return QPoly([], self.field, self.var)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return QPoly(out, self.field, self.var)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def leading(self):
        return self.coeffs[-1]

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [self.field.zero] * max(len(rem) - dq, 1)
        inv_lead = 1 / other.leading()
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv_lead
            if c:
                quot[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] = rem[k - dq + j] - c * b
        return QPoly(quot, self.field, self.var), QPoly(rem[:dq] if dq > 0 else [], self.field, self.var)

    def monic(self) -> "QPoly":
        return self * (1 / self.leading())

    def gcd(self, other: "QPoly") -> "QPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def __call__(self, x):
        acc = self.field.zero if not isinstance(x, QSeries) else QSeries.zero(x.order, x.field, x.var)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def taylor(self, order: int) -> QSeries:
        return QSeries(self.coeffs, order, self.field, self.var)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)

    __repr__ = __str__


class QRational:
    """P(q)/Q(q) with Q(0) = 1 and gcd(P, Q) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: QPoly, den: QPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den) if not num.is_zero() else den.monic()
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        if num.is_zero():
            den = QPoly([1], den.field, den.var)
        c0 = den.coeffs[0] if den.coeffs else den.field.zero
        if not c0:
            raise ValueError("denominator vanishes at q = 0; not a power series")
        inv = 1 / c0
        self.num = num * inv
        self.den = den * inv

    def taylor(self, order: int) -> QSeries:
        return self.num.taylor(order) * self.den.taylor(order).inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, QRational) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"

    __repr__ = __str__


# --- rational reconstruction ---------------------------------------------


class ReconstructionError(ArithmeticError):
    pass


class InsufficientCoefficientsError(ReconstructionError):
    pass


class NoRationalFormError(ReconstructionError):
    pass


def rational_reconstruct(s: QSeries, max_deg: int) -> QRational:
    """Find P/Q with deg P, deg Q <= max_deg matching every available coefficient.

    Tries d = 0, 1, ..., max_deg and returns the first consistent solution,
    reduced.  Coefficients beyond the ones used to solve serve as checks.
    """
    from .linalg import SingularMatrixError, solve_linear

    if s.order < 2 * max_deg + 2:
        raise InsufficientCoefficientsError(
            f"need truncation order >= {2 * max_deg + 2}, have {s.order}"
        )
    c = s.coeffs
    F = s.field
    for d in range(max_deg + 1):
        # denominators Q = 1 + Q_1 q + ... + Q_d q^d; equations k = d+1..2d
        if d == 0:
            qs: list = []
        else:
            A = [[c[k - j] if k - j >= 0 else F.zero for j in range(1, d + 1)] for k in range(d + 1, 2 * d + 1)]
            b = [-c[k] for k in range(d + 1, 2 * d + 1)]
            try:
                qs = solve_linear(A, b, F)
            except SingularMatrixError:
                continue
        den = [F.one] + list(qs)
        num = []
        for k in range(d + 1):
            acc = F.zero
            for j in range(min(k, d) + 1):
                acc = acc + den[j] * c[k - j]
            num.append(acc)
        candidate = QRational(QPoly(num, F, s.var), QPoly(den, F, s.var))
        if candidate.taylor(s.order) == s:
            return candidate
    raise NoRationalFormError(f"no rational form with degrees <= {max_deg} matches {s.order + 1} coefficients")
