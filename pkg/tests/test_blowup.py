import itertools
import random

import pytest

from bellnc.blowup import (
    IR,
    RI,
    BlowupRing,
    a_member,
    center_check,
    eval_rep,
    generating_family,
    image_algebra_dim,
    image_basis,
    is_simple_point,
    random_member,
    rep_dims,
)
from bellnc.errors import MembershipError
from bellnc.matrices import SWAP, Matrix
from bellnc.poly import SPACETIME, Point, point
from bellnc.scalars import Scalar
from bellnc.support import SupportingRing, SupportScenario, in_zero_locus
from bellnc.textio import parse_poly

x, y, z, t = SPACETIME.gens()
A = BlowupRing(SupportingRing.from_scenario(SupportScenario.real(1)))
A_IN = BlowupRing(SupportingRing.from_scenario(SupportScenario.instrumental((0, 0, 1, 1), (0, 0, -1, 1))))
ON = point(SPACETIME, 0, 0, 1, 1)
OFF = point(SPACETIME, 1, 0, 0, 0)


def U(i, j):
    return Matrix.unit(i, j, 2, SPACETIME)


def grid(n=1):
    return [Point(SPACETIME, tuple(map(Scalar.of, c))) for c in itertools.product(range(-n, n + 1), repeat=4)]


def test_orderings():
    assert RI.g == Matrix.identity(2)
    assert IR.g == SWAP
    assert IR.g @ IR.g == Matrix.identity(2)


def test_membership():
    assert a_member(U(1, 2), A)
    assert not a_member(U(2, 1), A)
    assert a_member(Matrix.diag(x, SPACETIME.zero()), A)
    assert not a_member(Matrix.diag(z, z), A)
    assert a_member(U(2, 1) * (z * z - t * t), A)


def test_eval_rep_examples():
    M = U(2, 1) * (z * z - t * t)
    assert eval_rep(M, ON, RI, A).matrix.is_zero()
    one = Matrix.identity(2, SPACETIME)
    assert eval_rep(one, OFF, IR, A).matrix == Matrix.identity(2)
    img = eval_rep(Matrix.diag(x, SPACETIME.zero()), OFF, RI, A)
    assert img.matrix == Matrix.diag(1, 0)
    assert img.shape == "full"
    assert eval_rep(one, ON, RI, A).shape == "upper-triangular"
    with pytest.raises(MembershipError):
        eval_rep(U(2, 1), ON, RI, A)


def test_image_dims():
    assert image_algebra_dim(OFF, A) == 4
    assert image_algebra_dim(ON, A) == 3
    assert image_algebra_dim(point(SPACETIME, 0, 0, 1, 1), A_IN) == 3


def test_simplicity_matches_zero_locus_on_grid():
    for p in grid(1):
        assert is_simple_point(p, A) == (not in_zero_locus(p, A.ideal))
        assert is_simple_point(p, A_IN) == (not in_zero_locus(p, A_IN.ideal))


def test_image_basis_is_upper_triangular_on_support():
    basis = image_basis(ON, A)
    assert len(basis) == 3
    assert all(not B[1, 0] for B in basis)


def test_rep_dims():
    assert tuple(rep_dims(OFF, A)) == (1, 2, 2)
    assert tuple(rep_dims(ON, A)) == (1, 1, 2)
    for p in grid(1):
        d = rep_dims(p, A)
        assert d.d11 == 1 and d.d11A == 2
        assert d.row_condition()
        assert d.column_condition() == (not in_zero_locus(p, A.ideal))


def test_longer_products_add_nothing():
    for p in grid(1)[::7]:
        assert image_algebra_dim(p, A, 3) == image_algebra_dim(p, A, 2)


def test_generating_family_members():
    assert all(a_member(M, A) for M in generating_family(A))


def test_shape_law_on_random_members():
    rng = random.Random(5)
    for _ in range(30):
        M = random_member(rng, A)
        assert a_member(M, A)
        assert eval_rep(M, ON, RI, A).matrix[1, 0] == 0
        assert eval_rep(M, ON, IR, A).matrix[0, 1] == 0


def test_closure_and_functoriality():
    rng = random.Random(6)
    for _ in range(30):
        M, N = random_member(rng, A), random_member(rng, A)
        assert a_member(M @ N, A)
        for p in (ON, OFF):
            for g in (RI, IR):
                assert eval_rep(M @ N, p, g, A).matrix == eval_rep(M, p, g, A).matrix @ eval_rep(N, p, g, A).matrix


def test_center():
    samples = [parse_poly(s, SPACETIME) for s in ("1", "x*t", "z^2 - t^2")]
    assert center_check(A, samples)
    e11, e12 = U(1, 1), U(1, 2)
    assert e11 @ e12 != e12 @ e11
    with pytest.raises(MembershipError):
        center_check(A, [z])
