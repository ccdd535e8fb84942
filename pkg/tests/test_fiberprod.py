from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oracles import riemann_hurwitz_v4
from shafdec.errors import DegreeTooLow, NotCoprime, RepeatedRoots
from shafdec.exactmath import Poly
from shafdec.fiberprod import fiber_genus, genus_of_even_model
from strategies import distinct_rationals

X = Poly.x()


@pytest.mark.parametrize("deg, genus", [(1, 0), (2, 0), (3, 1), (4, 1), (5, 2), (6, 2), (9, 4)])
def test_genus_of_even_model(deg, genus):
    assert genus_of_even_model(Poly.from_roots(range(deg))) == genus


def test_genus_errors():
    with pytest.raises(RepeatedRoots):
        genus_of_even_model((X - 1) ** 2 * X)
    with pytest.raises(DegreeTooLow):
        genus_of_even_model(Poly([3]))


def test_genus_two_split():
    r = fiber_genus(Poly.from_roots([-1, F(-1, 2), F(-1, 3)], 120), Poly.from_roots([F(-1, 4), F(-1, 5), 0]))
    assert (r.g1, r.g2, r.g12, r.g3) == (1, 1, 2, 4)
    assert r.branch_points["X3"].count == 7
    assert r.ramification_total == 14


@pytest.mark.parametrize("g", range(2, 7))
def test_paper_degree_pattern(g):
    R1 = Poly.from_roots([1, 2, 3])
    R2 = Poly.from_roots(range(10, 10 + 2 * g - 1))
    r = fiber_genus(R1, R2)
    assert r.g3 == 2 * g == riemann_hurwitz_v4(3, 2 * g - 1)
    assert r.g3 >= 2


def test_two_quadratics():
    r = fiber_genus(Poly.from_roots([1, 2]), Poly.from_roots([3, 4]))
    assert (r.g1, r.g2, r.g12, r.g3) == (0, 0, 1, 1)
    assert not r.branch_points["X3"].infinity


def test_nonrational_branch_points():
    r = fiber_genus(X**2 + 1, X**3 - 2)
    assert r.branch_points["X3"].nonrational == 5
    assert r.g3 == riemann_hurwitz_v4(2, 3)


def test_not_coprime():
    with pytest.raises(NotCoprime):
        fiber_genus(Poly.from_roots([1, 2]), Poly.from_roots([2, 3]))


@given(distinct_rationals(4, 20), st.data())
def test_routes_agree_and_symmetric(roots, data):
    k = data.draw(st.integers(2, len(roots) - 2))
    a, b = roots[:k], roots[k:]
    R1, R2 = Poly.from_roots(a), Poly.from_roots(b)
    r = fiber_genus(R1, R2)
    assert r.g3 == r.g1 + r.g2 + r.g12 == riemann_hurwitz_v4(len(a), len(b))
    s = fiber_genus(R2, R1)
    assert (s.g3, s.g12) == (r.g3, r.g12) and (s.g1, s.g2) == (r.g2, r.g1)
