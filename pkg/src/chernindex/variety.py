"""Projective space and smooth complete intersections in it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .algebra import GradedClass, TwistPoly
from .bundles import VirtualBundle, dual
from .errors import DimensionMismatchError, DomainError, ValidationError


@dataclass(frozen=True)
class CompleteIntersection:
    """Smooth complete intersection of type ``multidegrees`` in ``P^ambient_dim``.

    Only the numerical type is stored; smoothness is assumed.  An empty
    ``multidegrees`` is projective space itself.
    """

    ambient_dim: int
    multidegrees: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "multidegrees", tuple(int(d) for d in self.multidegrees))
        n, c = self.ambient_dim, len(self.multidegrees)
        if n < 1:
            raise ValidationError(f"ambient dimension must be positive, got {n}")
        if any(d < 1 for d in self.multidegrees):
            raise ValidationError(f"degrees must be at least 1, got {self.multidegrees}")
        if c >= n:
            raise ValidationError(
                f"{c} equations in P^{n} leave dimension {n - c}; need dimension >= 1"
            )

    @classmethod
    def projective_space(cls, n: int) -> "CompleteIntersection":
        return cls(n, ())

    @property
    def codim(self) -> int:
        return len(self.multidegrees)

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.codim

    @property
    def degree(self) -> int:
        return prod(self.multidegrees)

    @property
    def name(self) -> str:
        if not self.multidegrees:
            return f"P({self.ambient_dim})"
        return f"CI({self.ambient_dim};{','.join(map(str, self.multidegrees))})"

    def hyperplane(self) -> GradedClass:
        return GradedClass.hyperplane(self.dim)

    def __str__(self):
        return self.name


def hyperplane_class(X: CompleteIntersection) -> GradedClass:
    return X.hyperplane()


def tangent_ch(X: CompleteIntersection) -> VirtualBundle:
    """``ch(T_X) = (n - c) + sum_k (n + 1 - sum_i d_i^k) H^k / k!``.

    Restrict the Euler sequence of ``P^n`` and subtract the normal bundle
    ``sum_i O(d_i)``.
    """
    n = X.ambient_dim
    parts = [TwistPoly.const(X.dim)]
    for k in range(1, X.dim + 1):
        parts.append(TwistPoly.const(Fraction(n + 1 - sum(d**k for d in X.multidegrees), factorial(k))))
    return VirtualBundle(X.dim, GradedClass(X.dim, tuple(parts)))


def cotangent_ch(X: CompleteIntersection) -> VirtualBundle:
    return dual(tangent_ch(X))


def integrate(X: CompleteIntersection, a: GradedClass) -> TwistPoly:
    """Degree map: the coefficient of ``H^dim`` times ``deg X``."""
    if a.dim != X.dim:
        raise DimensionMismatchError(
            f"class of dimension {a.dim} cannot be integrated over {X.name} (dimension {X.dim})"
        )
    return a.parts[X.dim] * X.degree


def paper_compat_cotangent_ch(X: CompleteIntersection) -> VirtualBundle:
    """Printed surface formula ``2 - (5 + d1 + d2) H + (5 - d1^2 - d2^2) H^2 / 2``.

    Kept verbatim for replaying published numbers.  It disagrees with
    :func:`cotangent_ch` in the ``H`` coefficient; use it only in
    paper-compat mode.
    """
    if X.ambient_dim != 4 or X.codim != 2:
        raise DomainError(
            f"paper-compat cotangent formula only applies to surfaces CI(4;d1,d2), not {X.name}"
        )
    d1, d2 = X.multidegrees
    parts = (2, -(5 + d1 + d2), Fraction(5 - d1 * d1 - d2 * d2, 2))
    return VirtualBundle(2, GradedClass(2, parts))
