import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from bellnc.errors import NotInvertibleError
from bellnc.scalars import I, INV_SQRT2, ONE, S2, XI, ZERO, Scalar, conj, e_i_theta, specialize_theta
from strategies import close, numeric, scalars, xi_free_scalars


def test_basic_identities():
    assert I * I == -1
    assert S2 * S2 == 2
    assert INV_SQRT2 * INV_SQRT2 == Fraction(1, 2)
    assert XI * XI.inverse() == ONE
    assert (XI**-2) * XI**2 == 1


def test_phase_is_minus_xi_squared():
    assert e_i_theta() == -(XI**2)
    assert e_i_theta().specialize_theta("zero") == 1
    assert e_i_theta().specialize_theta("pi") == -1


def test_phase_is_unimodular():
    p = e_i_theta()
    assert p * p.conj() == 1


def test_conjugation_examples():
    assert conj(I) == -I
    assert conj(S2) == S2
    assert conj(XI) == XI**-1
    assert conj(Scalar.from_components(1, 2, 3, 4)) == Scalar.from_components(1, -2, 3, -4)


def test_specialize_theta():
    assert specialize_theta(XI, "zero") == I
    assert specialize_theta(XI, "pi") == -1
    assert specialize_theta(XI + XI**-1, "zero") == 0
    with pytest.raises(ValueError):
        XI.specialize_theta("half")


def test_inverse_of_field_element():
    a = Scalar.from_components(1, 1, 1, 0)
    assert a * a.inverse() == 1
    assert Scalar.of(3) / Scalar.of(6) == Fraction(1, 2)


def test_division_errors():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(NotInvertibleError):
        (ONE + XI).inverse()


def test_nonnegativity_is_exact():
    # 3 - 2*sqrt(2) is about 0.17, 1 - sqrt(2) is negative
    assert Scalar.from_components(3, 0, -2, 0).is_nonnegative_real()
    assert not Scalar.from_components(1, 0, -1, 0).is_nonnegative_real()
    assert not I.is_nonnegative_real()
    assert not XI.is_nonnegative_real()
    assert ZERO.is_nonnegative_real()


def test_printing():
    assert str(ZERO) == "0"
    assert str(Scalar.of(Fraction(-1, 2))) == "-1/2"
    assert str(-(XI**2)) == "-xi^2"


@settings(max_examples=500, deadline=None)
@given(scalars(), scalars(), scalars())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@settings(max_examples=500, deadline=None)
@given(xi_free_scalars)
def test_field_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == ONE


@settings(max_examples=500, deadline=None)
@given(scalars(), scalars())
def test_conjugation_is_an_involutive_automorphism(a, b):
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()


@settings(max_examples=500, deadline=None)
@given(scalars(), scalars())
def test_agrees_with_float_oracle(a, b):
    for theta in (0.0, math.pi, 0.7):
        assert close(numeric(a * b, theta), numeric(a, theta) * numeric(b, theta))
        assert close(numeric(a.conj(), theta), numeric(a, theta).conjugate())


@settings(max_examples=300, deadline=None)
@given(scalars())
def test_specialization_matches_float_oracle(a):
    assert close(numeric(a.specialize_theta("zero"), 0.0), numeric(a, 0.0))
    assert close(numeric(a.specialize_theta("pi"), 0.0), numeric(a, math.pi))


@settings(max_examples=300, deadline=None)
@given(scalars())
def test_norm_is_nonnegative(a):
    n = a * a.conj()
    if n.is_xi_free():
        assert n.is_nonnegative_real()
