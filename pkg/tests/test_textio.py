import random
from fractions import Fraction

import pytest

from bellnc.errors import ParseError
from bellnc.matrices import Matrix
from bellnc.poly import SPACETIME, SPIN, Poly
from bellnc.scalars import I, S2, XI, Scalar
from bellnc.textio import (
    format_matrix,
    parse_ast,
    parse_matrix,
    parse_poly,
    parse_scalar,
    print_poly,
    tokenize,
)

ua, da, ub, db = SPIN.gens()


def test_bell_polynomial():
    assert parse_poly("ua*db - da*ub", SPIN) == ua * db - da * ub
    assert print_poly(ua * db - da * ub) == "ua*db - da*ub"


def test_canonical_printing():
    z, t = SPACETIME.var("z"), SPACETIME.var("t")
    assert print_poly(z * z - t * t) == "z^2 - t^2"
    assert print_poly(SPACETIME.zero()) == "0"
    assert print_poly(SPACETIME.const(-3)) == "-3"


def test_scalar_atoms():
    assert parse_scalar("i") == I
    assert parse_scalar("s2^2") == 2
    assert parse_scalar("xi^-1") == XI.inverse()
    assert parse_scalar("xi^-3") == XI**-3
    assert parse_scalar("-1/2*s2*xi^2") == -(S2 * XI**2) * Fraction(1, 2)


def test_ast_kinds():
    node = parse_ast("-x^2 + 3*y")
    assert node.kind == "add"
    assert node.children[0].kind == "neg"
    assert node.children[0].children[0].kind == "pow"


@pytest.mark.parametrize(
    "text, pos",
    [
        ("x^", 2),
        ("x + $", 4),
        ("x y", 2),
        ("(x + y", 6),
        ("", 0),
        ("x^1/2", 2),
        ("x^-1", 2),
        ("1/0", 0),
        ("x +", 3),
    ],
)
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_poly(text, SPACETIME)
    assert info.value.position == pos
    assert str(info.value).endswith(f"at position {pos}")


def test_malformed_exponent_message():
    with pytest.raises(ParseError, match="malformed exponent at position 2"):
        parse_poly("x^", SPACETIME)


def test_unknown_variable_is_an_error():
    with pytest.raises(ParseError):
        parse_poly("q + 1", SPACETIME)


def test_implicit_multiplication_rejected():
    with pytest.raises(ParseError):
        parse_poly("2x", SPACETIME)


def test_tokens():
    kinds = [t.kind for t in tokenize("3/4*ua ^ 2")]
    assert kinds == ["num", "op", "name", "op", "num", "end"]


def test_matrix_round_trip():
    M = parse_matrix([["ua", "xi*da"], ["xi*ub", "db"]], SPIN)
    assert format_matrix(M) == "[[ua, xi*da], [xi*ub, db]]"
    assert parse_matrix([["ua", "xi*da"], ["xi*ub", "db"]], SPIN) == M
    assert format_matrix(Matrix.identity(2)) == "[[1, 0], [0, 1]]"


def _random_scalar(rng):
    out = {}
    for k in rng.sample(range(-2, 3), rng.randint(1, 2)):
        comps = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) if rng.random() < 0.6 else 0 for _ in range(4)]
        out[k] = comps
    return Scalar(out)


def _random_poly(rng, varset):
    terms = {}
    for _ in range(rng.randint(0, 5)):
        e = tuple(rng.randint(0, 3) for _ in varset.names)
        terms[e] = _random_scalar(rng)
    return Poly(varset, terms)


def test_round_trip_1000_random_polys():
    rng = random.Random(7)
    for k in range(1000):
        f = _random_poly(rng, SPIN if k % 2 else SPACETIME)
        text = print_poly(f)
        g = parse_poly(text, f.varset)
        assert g == f, text
        assert print_poly(g) == text  # printing is idempotent through parsing
