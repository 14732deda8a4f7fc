"""Splitting-principle reference engine.

Bundles are explicit multisets of Chern roots ``a * H`` with rational
``a``.  Everything here works root by root with plain lists of Fractions
(polynomials in ``H`` truncated at ``dim``) and never calls the
power-sum code in :mod:`chernindex.bundles`; results are wrapped as
:class:`GradedClass` only at the boundary so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import List

from .algebra import GradedClass

MAX_SYM_ORDER = 3


@dataclass(frozen=True)
class RootBundle:
    roots: tuple
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(sorted(Fraction(r) for r in self.roots)))

    @property
    def rank(self) -> int:
        return len(self.roots)


def _mul(a: List[Fraction], b: List[Fraction], dim: int) -> List[Fraction]:
    out = [Fraction(0)] * (dim + 1)
    for i in range(dim + 1):
        for j in range(dim + 1 - i):
            out[i + j] += a[i] * b[j]
    return out


def _exp_root(a: Fraction, dim: int) -> List[Fraction]:
    return [a**k / factorial(k) for k in range(dim + 1)]


def _td_coefficients(dim: int) -> List[Fraction]:
    # x / (1 - e^-x): long division of x by 1 - e^-x, with x cancelled
    n = dim + 1
    den = [Fraction((-1) ** k, factorial(k + 1)) for k in range(n)]  # (1 - e^-x)/x
    q = [Fraction(0)] * n
    for m in range(n):
        acc = (1 if m == 0 else 0) - sum(q[k] * den[m - k] for k in range(m))
        q[m] = acc / den[0]
    return q


def oracle_ch(b: RootBundle) -> GradedClass:
    total = [Fraction(0)] * (b.dim + 1)
    for r in b.roots:
        total = [x + y for x, y in zip(total, _exp_root(r, b.dim))]
    return GradedClass(b.dim, tuple(total))


def oracle_sum(a: RootBundle, b: RootBundle) -> RootBundle:
    return RootBundle(a.roots + b.roots, a.dim)


def oracle_dual(b: RootBundle) -> RootBundle:
    return RootBundle(tuple(-r for r in b.roots), b.dim)


def oracle_tensor(a: RootBundle, b: RootBundle) -> RootBundle:
    return RootBundle(tuple(x + y for x in a.roots for y in b.roots), a.dim)


def oracle_sym(k: int, b: RootBundle) -> RootBundle:
    if not 0 <= k <= MAX_SYM_ORDER:
        raise ValueError(f"Sym^{k} outside 0..{MAX_SYM_ORDER}")
    return RootBundle(
        tuple(sum(c, Fraction(0)) for c in combinations_with_replacement(b.roots, k)), b.dim
    )


def oracle_det(b: RootBundle) -> RootBundle:
    return RootBundle((sum(b.roots, Fraction(0)),), b.dim)


def oracle_todd(b: RootBundle) -> GradedClass:
    td = _td_coefficients(b.dim)
    total = [Fraction(1)] + [Fraction(0)] * b.dim
    for r in b.roots:
        total = _mul(total, [c * r**k for k, c in enumerate(td)], b.dim)
    return GradedClass(b.dim, tuple(total))


def oracle_chern(b: RootBundle) -> tuple:
    """Elementary symmetric polynomials of the roots, ``c_0 .. c_dim``."""
    total = [Fraction(1)] + [Fraction(0)] * b.dim
    for r in b.roots:
        total = _mul(total, [Fraction(1), r] + [Fraction(0)] * (b.dim - 1), b.dim)
    return tuple(total)
