from fractions import Fraction as F

import pytest

from chernindex.algebra import GradedClass, TwistPoly
from chernindex.bundles import (
    ChernVector,
    VirtualBundle,
    bundle_sum,
    chern_classes,
    determinant,
    difference,
    dual,
    integrality_check,
    line_bundle,
    power_sums,
    sym_power,
    tensor,
    todd,
)
from chernindex.errors import DimensionMismatchError, DomainError
from chernindex.hrr import euler_characteristic
from chernindex.variety import CompleteIntersection, cotangent_ch, tangent_ch

N = TwistPoly.var()
P1 = CompleteIntersection(1)
P2 = CompleteIntersection(2)
S = CompleteIntersection(4, (2, 3))


def O(X, t):
    return line_bundle(X, t)


def test_line_bundle_examples():
    assert O(P2, N).ch == GradedClass(2, (1, N, N * N / 2))
    assert O(P2, 0) == VirtualBundle.trivial(2)
    assert O(P2, 3).ch == GradedClass(2, (1, 3, F(9, 2)))


def test_sum_difference_tensor():
    assert tensor(O(P2, 1), O(P2, 2)) == O(P2, 3)
    E = O(P2, 1) + O(P2, 2)
    assert difference(E, E) == VirtualBundle.zero(2)
    assert bundle_sum(O(P2, 1), O(P2, 2)).ch == GradedClass(2, (2, 3, F(5, 2)))
    with pytest.raises(DimensionMismatchError):
        O(P1, 1) + O(P2, 1)


def test_dual():
    E = VirtualBundle(2, GradedClass(2, (2, 3, F(5, 2))))
    assert dual(E).ch == GradedClass(2, (2, -3, F(5, 2)))
    assert dual(dual(E)) == E
    assert dual(O(P2, 2)) == O(P2, -2)
    assert dual(O(P2, N)) == O(P2, -N)


def test_chern_classes_examples():
    c = chern_classes(O(P2, 1) + O(P2, 2))
    assert c.classes == (1, 3, 2)
    c = chern_classes(tangent_ch(S))
    assert c.classes == (1, 0, 4)
    assert chern_classes(VirtualBundle.trivial(3, 5)).classes == (1, 0, 0, 0)


def test_newton_round_trip():
    E = O(P2, 1) + O(P2, 2) - O(P2, -1)
    c = chern_classes(E)
    assert c.to_ch(E.rank) == E.ch
    assert c.power_sums(E.rank) == power_sums(E)


def test_todd_examples():
    td = todd(tangent_ch(S))
    assert td == GradedClass(2, (1, 0, F(1, 3)))
    assert todd(tangent_ch(P1)) == GradedClass(1, (1, 1))
    assert todd(VirtualBundle.trivial(3, 4)) == GradedClass.one(3)


def test_todd_surface_formula():
    # Td = 1 + c1/2 + (c1^2 + c2)/12 on a surface
    for X in [CompleteIntersection(4, (2, 2)), CompleteIntersection(3, (4,)), P2, S]:
        T = tangent_ch(X)
        c = chern_classes(T)
        expected = GradedClass(2, (1, c[1] / 2, (c[1] * c[1] + c[2]) / 12))
        assert todd(T) == expected


def test_sym_power_examples():
    L = O(P2, 1)
    assert sym_power(2, L) == tensor(L, L)
    E = O(P2, 1) + O(P2, 2)
    assert sym_power(0, E) == VirtualBundle.trivial(2)
    assert sym_power(1, E) == E
    assert sym_power(2, E).ch == GradedClass(2, (3, 9, F(29, 2)))


def test_sym_power_k2_formula():
    # q_m = (sum_j C(m,j) p_j p_(m-j) + 2^m p_m) / 2, literally
    from math import comb

    E = O(CompleteIntersection(3), 1) + O(CompleteIntersection(3), -2) + O(CompleteIntersection(3), 3)
    p = power_sums(E)
    q = [
        (sum((p[j] * p[m - j] * comb(m, j) for j in range(m + 1)), TwistPoly()) + p[m] * 2**m) / 2
        for m in range(4)
    ]
    assert power_sums(sym_power(2, E)) == tuple(q)


def test_sym_power_limits():
    with pytest.raises(DomainError):
        sym_power(4, O(P2, 1))
    with pytest.raises(DomainError):
        sym_power(2, -O(P2, 1))


def test_determinant():
    assert determinant(tangent_ch(P2)) == O(P2, 3)
    assert determinant(VirtualBundle.trivial(2, 3)) == VirtualBundle.trivial(2)
    assert determinant(cotangent_ch(S)) == VirtualBundle.trivial(2)


def test_integrality_check():
    C = CompleteIntersection(3, (2, 2))
    td = todd(tangent_ch(C))
    twisted = tensor(cotangent_ch(C), O(C, N)).ch * td
    for n in range(11):
        assert integrality_check(twisted, n) == (True, None)
    assert twisted == GradedClass(1, (1, N))
    assert integrality_check(GradedClass(2, (1, 0, F(3, 2))), 0) == (False, (2, F(3, 2)))
    assert integrality_check(GradedClass(2, (4, -2, 7)), 0) == (True, None)


def test_chern_vector_requires_unit():
    with pytest.raises(ValueError):
        ChernVector((2, 1))


SERRE_VARIETIES = [
    CompleteIntersection(1),
    CompleteIntersection(2),
    CompleteIntersection(3, (2, 2)),
    CompleteIntersection(3, (4,)),
    CompleteIntersection(4, (2, 3)),
]


@pytest.mark.parametrize("X", SERRE_VARIETIES, ids=lambda X: X.name)
def test_serre_duality(X):
    K = determinant(cotangent_ch(X))
    bundles = [O(X, m) for m in range(-3, 4)] + [cotangent_ch(X), O(X, N)]
    for E in bundles:
        lhs = euler_characteristic(X, E)
        rhs = euler_characteristic(X, tensor(dual(E), K)) * (-1) ** X.dim
        assert lhs == rhs
