"""Exact scalar, power series and truncated graded ring arithmetic.

Scalars are :class:`fractions.Fraction` throughout.  Three value types live
here:

* :class:`PowerSeries` -- univariate series truncated at a fixed order,
  used to expand ``exp`` and the Todd generating function.
* :class:`TwistPoly` -- polynomials in the formal twist variable ``N``.
* :class:`GradedClass` -- elements of ``Q[N][H] / (H^(dim+1))``.

All values are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatchError, DomainError

Rational = Fraction

Scalar = Union[int, Fraction]


def to_rational(value) -> Fraction:
    """Coerce an exact number to Fraction; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


# ---------------------------------------------------------------------------
# Power series


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients ``c_0 .. c_order`` of a series in ``x`` modulo ``x^(order+1)``."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be non-negative")
        cs = [to_rational(c) for c in self.coeffs[: self.order + 1]]
        cs += [Fraction(0)] * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, coeffs: Iterable, order: int) -> "PowerSeries":
        return cls(tuple(coeffs), order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls((0, 1), order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls((1,), order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def valuation(self):
        """Smallest exponent with a nonzero coefficient, or None for 0."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def _order_with(self, other: "PowerSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if is_scalar(other):
            other = PowerSeries((other,), self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = self._order_with(other)
        return PowerSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if is_scalar(other):
            other = PowerSeries((other,), self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            c = to_rational(other)
            return PowerSeries(tuple(c * a for a in self.coeffs), self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = self._order_with(other)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return PowerSeries(tuple(out), n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (Fraction(1) / to_rational(other))
        return series_div(self, other)

    def substitute_scaled(self, factor) -> "PowerSeries":
        """Return ``f(factor * x)``."""
        a = to_rational(factor)
        return PowerSeries(tuple(c * a**k for k, c in enumerate(self.coeffs)), self.order)

    def __str__(self):
        return f"{format_poly(self.coeffs, 'x')} + O(x^{self.order + 1})"


def series_exp(s: PowerSeries) -> PowerSeries:
    """Formal exponential of a series without constant term."""
    if s.coeffs[0]:
        raise DomainError("series_exp needs a series with zero constant term")
    n = s.order
    f = [Fraction(0)] * (n + 1)
    f[0] = Fraction(1)
    # n f_n = sum_{k=1}^n k s_k f_{n-k}  (from f' = s' f)
    for m in range(1, n + 1):
        acc = sum((k * s.coeffs[k] * f[m - k] for k in range(1, m + 1)), Fraction(0))
        f[m] = acc / m
    return PowerSeries(tuple(f), n)


def series_log(s: PowerSeries) -> PowerSeries:
    """Formal logarithm of a series with constant term 1."""
    if s.coeffs[0] != 1:
        raise DomainError("series_log needs a series with constant term 1")
    n = s.order
    g = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        acc = m * s.coeffs[m]
        acc -= sum((k * g[k] * s.coeffs[m - k] for k in range(1, m)), Fraction(0))
        g[m] = acc / m
    return PowerSeries(tuple(g), n)


def series_div(num: PowerSeries, den: PowerSeries) -> PowerSeries:
    """Quotient ``num / den``.

    A common power ``x^v`` (``v`` the valuation of ``den``) is cancelled
    first, so ``x / (1 - e^(-x))`` is allowed.  The result is known to order
    ``min(num.order, den.order) - v``.
    """
    v = den.valuation()
    if v is None:
        raise DomainError("division by the zero series")
    vn = num.valuation()
    if vn is not None and vn < v:
        raise DomainError(
            f"numerator vanishes to order {vn} but denominator to order {v}; "
            "quotient is not a power series"
        )
    order = min(num.order, den.order) - v
    if order < 0:
        raise DomainError("not enough known coefficients to divide")
    a = num.coeffs[v : v + order + 1]
    b = den.coeffs[v : v + order + 1]
    lead = b[0]
    q = [Fraction(0)] * (order + 1)
    for m in range(order + 1):
        acc = a[m] - sum((q[k] * b[m - k] for k in range(m)), Fraction(0))
        q[m] = acc / lead
    return PowerSeries(tuple(q), order)


# ---------------------------------------------------------------------------
# Polynomials in N


@dataclass(frozen=True)
class TwistPoly:
    """Polynomial in the twist variable ``N``; ``coeffs[i]`` multiplies ``N^i``.

    Trailing zeros are stripped so the zero polynomial is always ``()``.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [to_rational(c) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, value) -> "TwistPoly":
        return cls((value,))

    @classmethod
    def var(cls) -> "TwistPoly":
        return cls((0, 1))

    @classmethod
    def coerce(cls, value) -> "TwistPoly":
        if isinstance(value, TwistPoly):
            return value
        return cls((value,))

    @property
    def degree(self) -> int:
        """Degree in N; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if is_scalar(other):
            other = TwistPoly.const(other)
        if not isinstance(other, TwistPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if is_scalar(other):
            other = TwistPoly.const(other)
        if not isinstance(other, TwistPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return TwistPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return TwistPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if is_scalar(other):
            other = TwistPoly.const(other)
        if not isinstance(other, TwistPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            c = to_rational(other)
            return TwistPoly(tuple(c * a for a in self.coeffs))
        if not isinstance(other, TwistPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return TwistPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TwistPoly(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self * (Fraction(1) / to_rational(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = TwistPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, at) -> Fraction:
        """Evaluate exactly at ``N = at`` (Horner)."""
        x = to_rational(at)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        return format_poly(self.coeffs, "N")

    def __repr__(self):
        return f"TwistPoly({str(self)!r})"


def _format_monomial(c: Fraction, k: int, var: str) -> str:
    mag = abs(c)
    if k == 0:
        return str(mag)
    power = var if k == 1 else f"{var}^{k}"
    return power if mag == 1 else f"{mag}*{power}"


def format_poly(coeffs: Sequence[Fraction], var: str) -> str:
    """Descending powers, explicit ``*``, rationals as ``p/q``: ``1/2*N^2 - N + 3``."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = _format_monomial(c, k, var)
        if not parts:
            parts.append(mono if c > 0 else "-" + mono)
        else:
            parts.append(("+ " if c > 0 else "- ") + mono)
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Truncated graded ring


def _as_twist(value) -> TwistPoly:
    if isinstance(value, TwistPoly):
        return value
    return TwistPoly.const(value)


@dataclass(frozen=True)
class GradedClass:
    """Element ``sum_k parts[k] * H^k`` of ``Q[N][H] / (H^(dim+1))``."""

    dim: int
    parts: tuple

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        ps = [_as_twist(p) for p in self.parts]
        if len(ps) > self.dim + 1:
            if any(ps[self.dim + 1 :]):
                raise DimensionMismatchError(
                    f"{len(ps)} parts given for a class of dimension {self.dim}"
                )
            ps = ps[: self.dim + 1]
        ps += [TwistPoly()] * (self.dim + 1 - len(ps))
        object.__setattr__(self, "parts", tuple(ps))

    @classmethod
    def of(cls, dim: int, parts: Iterable) -> "GradedClass":
        return cls(dim, tuple(parts))

    @classmethod
    def zero(cls, dim: int) -> "GradedClass":
        return cls(dim, ())

    @classmethod
    def one(cls, dim: int) -> "GradedClass":
        return cls(dim, (1,))

    @classmethod
    def hyperplane(cls, dim: int) -> "GradedClass":
        return cls(dim, (0, 1))

    def __getitem__(self, k: int) -> TwistPoly:
        return self.parts[k]

    def _check(self, other: "GradedClass"):
        if self.dim != other.dim:
            raise DimensionMismatchError(
                f"cannot combine classes of dimension {self.dim} and {other.dim}"
            )

    def _lift(self, other):
        if isinstance(other, GradedClass):
            self._check(other)
            return other
        if is_scalar(other) or isinstance(other, TwistPoly):
            return GradedClass(self.dim, (other,))
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GradedClass(self.dim, tuple(a + b for a, b in zip(self.parts, other.parts)))

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self.dim, tuple(-p for p in self.parts))

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GradedClass(self.dim, tuple(a - b for a, b in zip(self.parts, other.parts)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other) or isinstance(other, TwistPoly):
            return GradedClass(self.dim, tuple(p * other for p in self.parts))
        if not isinstance(other, GradedClass):
            return NotImplemented
        return graded_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = GradedClass.one(self.dim)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.dim == other.dim and self.parts == other.parts

    def __hash__(self):
        return hash((self.dim, self.parts))

    def is_zero(self) -> bool:
        return not any(self.parts)

    def substitute(self, at) -> "GradedClass":
        """Set ``N = at`` in every part."""
        return GradedClass(self.dim, tuple(TwistPoly.const(p(at)) for p in self.parts))

    def exp(self) -> "GradedClass":
        """``exp`` of a class with zero degree-0 part (a finite sum here)."""
        if self.parts[0]:
            raise DomainError("exp needs a class with zero degree-0 part")
        result = GradedClass.one(self.dim)
        term = GradedClass.one(self.dim)
        for k in range(1, self.dim + 1):
            term = term * self * Fraction(1, k)
            result = result + term
        return result

    def __str__(self):
        return format_graded(self)

    def __repr__(self):
        return f"GradedClass(dim={self.dim}, {str(self)!r})"


def graded_mul(a: GradedClass, b: GradedClass) -> GradedClass:
    """Cup product; terms of total degree above ``dim`` vanish."""
    if a.dim != b.dim:
        raise DimensionMismatchError(
            f"cannot multiply classes of dimension {a.dim} and {b.dim}"
        )
    d = a.dim
    out = [TwistPoly()] * (d + 1)
    for i, p in enumerate(a.parts):
        if not p:
            continue
        for j in range(d + 1 - i):
            q = b.parts[j]
            if q:
                out[i + j] = out[i + j] + p * q
    return GradedClass(d, tuple(out))


def format_graded(a: GradedClass, var: str = "H") -> str:
    """Render as ``2 - 4*H^2`` or ``1 + N*H + (1/2*N^2 - 3)*H^2``."""
    pieces = []
    for k, p in enumerate(a.parts):
        if not p:
            continue
        power = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if len(p.coeffs) == 1 or (k > 0 and sum(1 for c in p.coeffs if c) == 1):
            # monomial coefficient: pull its sign out
            deg = max(i for i, c in enumerate(p.coeffs) if c)
            c = p.coeffs[deg]
            negative = c < 0
            if deg == 0:
                body = str(abs(c)) if (k == 0 or abs(c) != 1) else ""
            else:
                body = _format_monomial(c, deg, "N")
            if k:
                body = f"{body}*{power}" if body else power
        else:
            negative = False
            body = f"({p})*{power}" if k else str(p)
        if not pieces:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces) if pieces else "0"


def factorial(k: int) -> int:
    return math.factorial(k)
