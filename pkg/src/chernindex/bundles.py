"""Virtual bundles as (rank, Chern character) pairs and their calculus."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Optional, Tuple

from .algebra import (
    GradedClass,
    PowerSeries,
    TwistPoly,
    format_graded,
    series_div,
    series_exp,
    series_log,
)
from .errors import DimensionMismatchError, DomainError

MAX_SYM_ORDER = 3


@dataclass(frozen=True)
class VirtualBundle:
    """A class in ``K_0(X) (x) Q`` recorded by its rank and Chern character.

    ``rank`` may be negative for formal differences.  ``ch.parts[0]`` always
    equals ``rank``.
    """

    rank: int
    ch: GradedClass

    def __post_init__(self):
        if self.ch.parts[0] != TwistPoly.const(self.rank):
            raise ValueError(
                f"degree-0 part of ch ({self.ch.parts[0]}) must equal the rank {self.rank}"
            )

    @property
    def dim(self) -> int:
        return self.ch.dim

    @classmethod
    def from_ch(cls, ch: GradedClass) -> "VirtualBundle":
        p0 = ch.parts[0]
        if not p0.is_constant() or p0.constant.denominator != 1:
            raise DomainError(f"degree-0 part {p0} is not an integer rank")
        return cls(int(p0.constant), ch)

    @classmethod
    def trivial(cls, dim: int, rank: int = 1) -> "VirtualBundle":
        return cls(rank, GradedClass(dim, (rank,)))

    @classmethod
    def zero(cls, dim: int) -> "VirtualBundle":
        return cls(0, GradedClass.zero(dim))

    def _check(self, other: "VirtualBundle"):
        if self.dim != other.dim:
            raise DimensionMismatchError(
                f"bundles live on varieties of dimension {self.dim} and {other.dim}"
            )

    def __add__(self, other: "VirtualBundle") -> "VirtualBundle":
        return bundle_sum(self, other)

    def __sub__(self, other: "VirtualBundle") -> "VirtualBundle":
        return difference(self, other)

    def __mul__(self, other: "VirtualBundle") -> "VirtualBundle":
        return tensor(self, other)

    def __neg__(self):
        return VirtualBundle(-self.rank, -self.ch)

    def __str__(self):
        return f"rank {self.rank}, ch = {format_graded(self.ch)}"


@dataclass(frozen=True)
class ChernVector:
    """Chern classes ``c_0 = 1, c_1, ..., c_dim``; ``classes[k]`` is the coefficient of ``H^k``."""

    classes: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "classes", tuple(TwistPoly.coerce(c) for c in self.classes)
        )
        if not self.classes or self.classes[0] != 1:
            raise ValueError("c_0 must be 1")

    @property
    def dim(self) -> int:
        return len(self.classes) - 1

    def __getitem__(self, k: int) -> TwistPoly:
        return self.classes[k]

    def total(self) -> GradedClass:
        return GradedClass(self.dim, self.classes)

    def power_sums(self, rank: int = 0) -> Tuple[TwistPoly, ...]:
        """Invert Newton's identities; ``p_0`` is filled in with ``rank``."""
        e = self.classes
        p = [TwistPoly.const(rank)]
        for k in range(1, self.dim + 1):
            # p_k = (-1)^(k-1) k e_k + sum_{i<k} (-1)^(k-1+i) e_{k-i} p_i
            acc = e[k] * ((-1) ** (k - 1) * k)
            for i in range(1, k):
                acc = acc + e[k - i] * p[i] * (-1) ** (k - 1 + i)
            p.append(acc)
        return tuple(p)

    def to_ch(self, rank: int) -> GradedClass:
        p = self.power_sums(rank)
        return GradedClass(self.dim, tuple(p[k] / factorial(k) for k in range(self.dim + 1)))


# ---------------------------------------------------------------------------
# Constructors


def line_bundle(X, t) -> VirtualBundle:
    """``O_X(t)`` with ``ch = sum_k t^k H^k / k!``; ``t`` may involve ``N``."""
    t = TwistPoly.coerce(t)
    return VirtualBundle(1, GradedClass(X.dim, tuple(t**k / factorial(k) for k in range(X.dim + 1))))


def _line_from_c1(dim: int, c1: TwistPoly) -> VirtualBundle:
    return VirtualBundle(1, GradedClass(dim, tuple(c1**k / factorial(k) for k in range(dim + 1))))


def power_sums(a: VirtualBundle) -> Tuple[TwistPoly, ...]:
    """``p_k = k! ch_k`` with ``p_0 = rank``."""
    return tuple(a.ch.parts[k] * factorial(k) for k in range(a.dim + 1))


def _from_power_sums(dim: int, p) -> VirtualBundle:
    return VirtualBundle.from_ch(GradedClass(dim, tuple(p[k] / factorial(k) for k in range(dim + 1))))


# ---------------------------------------------------------------------------
# Ring structure


def bundle_sum(a: VirtualBundle, b: VirtualBundle) -> VirtualBundle:
    a._check(b)
    return VirtualBundle(a.rank + b.rank, a.ch + b.ch)


def difference(a: VirtualBundle, b: VirtualBundle) -> VirtualBundle:
    a._check(b)
    return VirtualBundle(a.rank - b.rank, a.ch - b.ch)


def tensor(a: VirtualBundle, b: VirtualBundle) -> VirtualBundle:
    a._check(b)
    return VirtualBundle(a.rank * b.rank, a.ch * b.ch)


def dual(a: VirtualBundle) -> VirtualBundle:
    parts = tuple(p if k % 2 == 0 else -p for k, p in enumerate(a.ch.parts))
    return VirtualBundle(a.rank, GradedClass(a.dim, parts))


# ---------------------------------------------------------------------------
# Characteristic classes


def chern_classes(a: VirtualBundle) -> ChernVector:
    """Chern classes from power sums via Newton's identities.

    Works formally for any rank, virtual ones included.
    """
    p = power_sums(a)
    e = [TwistPoly.const(1)]
    for k in range(1, a.dim + 1):
        acc = TwistPoly()
        for i in range(1, k + 1):
            term = e[k - i] * p[i]
            acc = acc + (term if i % 2 == 1 else -term)
        e.append(acc / k)
    return ChernVector(tuple(e))


def determinant(a: VirtualBundle) -> VirtualBundle:
    """Line bundle with ``c_1`` equal to ``c_1(a)``."""
    return _line_from_c1(a.dim, a.ch.parts[1] if a.dim >= 1 else TwistPoly())


def todd_series(order: int) -> PowerSeries:
    """``x / (1 - e^(-x))`` to the given order."""
    n = order + 1
    e_minus = series_exp(-PowerSeries.x(n))
    return series_div(PowerSeries.x(n), 1 - e_minus)


@lru_cache(maxsize=None)
def log_todd_coefficients(order: int) -> Tuple[Fraction, ...]:
    """Coefficients ``s_m`` of ``log td(x)``; ``s_1 = 1/2, s_2 = -1/24, s_3 = 0, ...``."""
    return series_log(todd_series(order)).coeffs


def todd(a: VirtualBundle) -> GradedClass:
    """Todd class ``exp(sum_m s_m p_m)`` through degree ``dim``."""
    s = log_todd_coefficients(max(a.dim, 1))
    p = power_sums(a)
    exponent = GradedClass(a.dim, (0,) + tuple(p[m] * s[m] for m in range(1, a.dim + 1)))
    return exponent.exp()


def _partitions(k: int):
    """Partitions of k, largest part first."""
    if k == 0:
        yield ()
        return

    def rec(n, largest):
        if n == 0:
            yield ()
            return
        for part in range(min(n, largest), 0, -1):
            for rest in rec(n - part, part):
                yield (part,) + rest

    yield from rec(k, k)


def _centralizer(lam) -> int:
    z = 1
    for part, mult in ((p, lam.count(p)) for p in set(lam)):
        z *= part**mult * factorial(mult)
    return z


def _compositions(m: int, length: int):
    if length == 0:
        if m == 0:
            yield ()
        return
    if length == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in _compositions(m - first, length - 1):
            yield (first,) + rest


def sym_power(k: int, a: VirtualBundle) -> VirtualBundle:
    """``Sym^k a`` for ``0 <= k <= 3`` from the power sums of ``a``.

    Averages over cycle types of the symmetric group: a cycle type
    ``(l_1, .., l_r)`` contributes ``sum (l_1 x_a1 + .. + l_r x_ar)^m``
    which expands in products of power sums.  For ``k = 2`` this is
    ``q_m = (sum_j C(m,j) p_j p_(m-j) + 2^m p_m) / 2``.
    """
    if k < 0 or k > MAX_SYM_ORDER:
        raise DomainError(f"Sym^{k} is not supported (0 <= k <= {MAX_SYM_ORDER})")
    if a.rank < 0:
        raise DomainError("Sym^k of a bundle with negative rank is not defined")
    if k == 0:
        return VirtualBundle.trivial(a.dim)
    p = power_sums(a)
    d = a.dim
    total = factorial(k)
    q = []
    for m in range(d + 1):
        acc = TwistPoly()
        for lam in _partitions(k):
            weight = Fraction(total, _centralizer(lam))
            inner = TwistPoly()
            for js in _compositions(m, len(lam)):
                coeff = factorial(m)
                term = TwistPoly.const(1)
                for part, j in zip(lam, js):
                    coeff //= factorial(j)
                    term = term * p[j] * part**j
                inner = inner + term * coeff
            acc = acc + inner * weight
        q.append(acc / total)
    result = _from_power_sums(d, q)
    assert result.rank == comb(a.rank + k - 1, k)
    return result


def integrality_check(a: GradedClass, at: int) -> Tuple[bool, Optional[Tuple[int, Fraction]]]:
    """Substitute ``N = at`` and test that every graded part is an integer.

    Returns ``(True, None)`` or ``(False, (codim, value))`` for the first
    non-integral part.
    """
    for k, part in enumerate(a.parts):
        value = part(at)
        if value.denominator != 1:
            return False, (k, value)
    return True, None


__all__ = [
    "ChernVector",
    "VirtualBundle",
    "bundle_sum",
    "chern_classes",
    "determinant",
    "difference",
    "dual",
    "integrality_check",
    "line_bundle",
    "log_todd_coefficients",
    "power_sums",
    "sym_power",
    "tensor",
    "todd",
    "todd_series",
]
