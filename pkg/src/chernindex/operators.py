"""Differential operators by their symbol data, and their index polynomials.

An operator of order ``<= n`` from ``F`` to ``G`` is recorded as
``(n, F, G)``.  Its symbol class on ``X`` is ``[P^n] [F] - [G]``, where
``P^n`` is the bundle of principal parts, and the index of the twist
``D(N)`` is ``int_X ch(symbol (x) O(N)) Td(T_X)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import GradedClass, TwistPoly
from .bundles import VirtualBundle, difference, line_bundle, sym_power, tensor, todd
from .errors import DomainError, ValidationError
from .variety import (
    CompleteIntersection,
    cotangent_ch,
    integrate,
    paper_compat_cotangent_ch,
    tangent_ch,
)

MAX_ORDER = 3
MODES = ("default", "paper-compat")

BundleLike = Union[VirtualBundle, str, object]


@dataclass(frozen=True)
class OperatorSpec:
    """Order, source and target of a differential operator.

    ``source`` and ``target`` are :class:`VirtualBundle` values or bundle
    expressions (strings or parsed ASTs) resolved against the variety.
    Ellipticity is taken on trust.
    """

    order: int
    source: BundleLike = "O(0)"
    target: BundleLike = "O(0)"
    elliptic: bool = True

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise ValidationError(f"operator order must be in 0..{MAX_ORDER}, got {self.order}")


def atiyah_operator() -> OperatorSpec:
    """The order-1 operator ``O -> O`` given by ``u: P^1 -> O``."""
    return OperatorSpec(1, "O(0)", "O(0)")


@dataclass(frozen=True)
class SymbolKClass:
    bundle: VirtualBundle

    @property
    def rank(self) -> int:
        return self.bundle.rank


def _check_mode(mode: str):
    if mode not in MODES:
        raise DomainError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")


def mode_cotangent(X: CompleteIntersection, mode: str = "default") -> VirtualBundle:
    _check_mode(mode)
    if mode == "paper-compat":
        return paper_compat_cotangent_ch(X)
    return cotangent_ch(X)


def mode_todd(X: CompleteIntersection, mode: str = "default") -> GradedClass:
    """Todd class of ``T_X``; paper-compat uses ``K = 0`` and ``int c_2 = 24``."""
    _check_mode(mode)
    if mode == "paper-compat":
        paper_compat_cotangent_ch(X)  # same domain check
        return GradedClass(2, (1, 0, Fraction(2, X.degree)))
    return todd(tangent_ch(X))


def principal_parts(cotangent: VirtualBundle, n: int) -> VirtualBundle:
    """``ch(P^n) = sum_{k <= n} ch(Sym^k Omega)`` from the jet filtration."""
    if not 0 <= n <= MAX_ORDER:
        raise DomainError(f"principal parts of order {n} are not supported (0..{MAX_ORDER})")
    out = sym_power(0, cotangent)
    for k in range(1, n + 1):
        out = out + sym_power(k, cotangent)
    return out


def principal_parts_ch(X: CompleteIntersection, n: int, mode: str = "default") -> VirtualBundle:
    return principal_parts(mode_cotangent(X, mode), n)


def resolve_bundle(X: CompleteIntersection, b: BundleLike, mode: str = "default") -> VirtualBundle:
    if isinstance(b, VirtualBundle):
        if b.dim != X.dim:
            raise DomainError(f"bundle of dimension {b.dim} does not live on {X.name}")
        return b
    from . import dsl

    if isinstance(b, str):
        b = dsl.parse_bundle(b)
    if not isinstance(b, dsl.Expr):
        raise DomainError(f"cannot resolve {b!r} to a bundle")
    return dsl.evaluate(b, X, cotangent=mode_cotangent(X, mode))


def symbol_class(X: CompleteIntersection, op: OperatorSpec, mode: str = "default") -> SymbolKClass:
    omega = mode_cotangent(X, mode)
    F = resolve_bundle(X, op.source, mode)
    G = resolve_bundle(X, op.target, mode)
    return SymbolKClass(difference(tensor(principal_parts(omega, op.order), F), G))


def index_polynomial(
    X: CompleteIntersection, op: OperatorSpec, mode: str = "default"
) -> TwistPoly:
    """Index of ``D(N)`` as a polynomial in ``N``."""
    sigma = symbol_class(X, op, mode).bundle
    twisted = tensor(sigma, line_bundle(X, TwistPoly.var()))
    return integrate(X, twisted.ch * mode_todd(X, mode))


def topological_index(
    X: CompleteIntersection, op: OperatorSpec, at: int, mode: str = "default"
) -> Fraction:
    return index_polynomial(X, op, mode)(at)


def twisted_operator(op: OperatorSpec, X: CompleteIntersection, m: int, mode: str = "default") -> OperatorSpec:
    """``D(m)``: source and target tensored with ``O(m)``."""
    O_m = line_bundle(X, m)
    return OperatorSpec(
        op.order,
        tensor(resolve_bundle(X, op.source, mode), O_m),
        tensor(resolve_bundle(X, op.target, mode), O_m),
        op.elliptic,
    )


__all__ = [
    "MODES",
    "OperatorSpec",
    "SymbolKClass",
    "atiyah_operator",
    "index_polynomial",
    "mode_cotangent",
    "mode_todd",
    "principal_parts",
    "principal_parts_ch",
    "resolve_bundle",
    "symbol_class",
    "topological_index",
    "twisted_operator",
]
