from fractions import Fraction

import pytest
from hypothesis import given, settings

from bellnc.errors import VarSetMismatch
from bellnc.poly import SPACETIME, SPIN, Poly, VarSet, eval_at, grevlex_key, point
from bellnc.scalars import XI, Scalar
from bellnc.textio import parse_poly
from strategies import polys

x, y, z, t = SPACETIME.gens()


def test_spin_and_spacetime_varsets():
    assert SPACETIME.names == ("x", "y", "z", "t")
    assert SPIN.names == ("ua", "da", "ub", "db")
    assert SPIN.designation == "spin"


def test_difference_of_squares():
    assert (z - t) * (z + t) == z * z - t * t
    assert ((z - t) * (z + t)).total_degree() == 2


def test_mixed_varsets_rejected():
    with pytest.raises(VarSetMismatch):
        x + SPIN.var("ua")


def test_duplicate_names_rejected():
    with pytest.raises(ValueError):
        VarSet(("a", "a"))


def test_grevlex_ties_broken_by_last_variable():
    # x*t < y*z under grevlex since t is the smallest variable
    assert grevlex_key((1, 0, 0, 1)) < grevlex_key((0, 1, 1, 0))
    assert (x * t + y * z).leading_term()[0] == (0, 1, 1, 0)


def test_extend_prepends_fresh_variables():
    ext = SPACETIME.extend("w")
    assert ext.names == ("w", "x", "y", "z", "t")
    f = (x * y).embed(ext)
    assert f.restrict(SPACETIME) == x * y


def test_evaluation():
    f = z * z - t * t
    assert eval_at(f, point(SPACETIME, 0, 0, 1, 1)) == 0
    assert eval_at(f, point(SPACETIME, 0, 0, 1, 2)) == -3
    assert eval_at(x + Fraction(1, 2), point(SPACETIME, Fraction(1, 2), 0, 0, 0)) == 1


def test_xi_coefficients_and_specialization():
    f = x + XI * y
    assert not f.is_xi_free()
    assert f.specialize_theta("pi") == x - y
    assert f.conj() == x + XI**-1 * y


def test_constant_detection():
    assert Poly(SPACETIME, {}).is_constant()
    assert SPACETIME.const(5).constant_term() == 5
    assert not x.is_constant()


@settings(max_examples=300, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == SPACETIME.zero()


@settings(max_examples=200, deadline=None)
@given(polys(), polys())
def test_evaluation_is_a_homomorphism(f, g):
    p = point(SPACETIME, 1, -2, Fraction(1, 3), 2)
    assert eval_at(f * g, p) == eval_at(f, p) * eval_at(g, p)
    assert eval_at(f + g, p) == eval_at(f, p) + eval_at(g, p)


def test_parse_matches_construction():
    assert parse_poly("(z - t)*(z + t)", SPACETIME) == z * z - t * t
    assert parse_poly("2*x^2*y - 1/3", SPACETIME) == 2 * x * x * y - Scalar.of(Fraction(1, 3))
