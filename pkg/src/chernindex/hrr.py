"""Hirzebruch-Riemann-Roch: Euler characteristics of (virtual) bundles."""

from __future__ import annotations

from fractions import Fraction

from .algebra import TwistPoly
from .bundles import VirtualBundle, todd
from .variety import CompleteIntersection, integrate, tangent_ch


def todd_of_variety(X: CompleteIntersection):
    return todd(tangent_ch(X))


def euler_characteristic(X: CompleteIntersection, E: VirtualBundle) -> TwistPoly:
    """``chi(X, E) = int_X ch(E) Td(T_X)``, a polynomial in ``N`` when ``E`` is twisted."""
    return integrate(X, E.ch * todd_of_variety(X))


def euler_characteristic_at(X: CompleteIntersection, E: VirtualBundle, at: int) -> Fraction:
    return euler_characteristic(X, E)(at)
