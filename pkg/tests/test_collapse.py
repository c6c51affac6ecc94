import itertools
import random
from fractions import Fraction

import pytest

from bellnc.blowup import IR, RI, BlowupRing, random_member
from bellnc.collapse import (
    TensorElement,
    collapse_subspace,
    collect,
    eval_tensor,
    expected_case,
    identity_value,
    left_square_check,
    mu,
    phi_tilde,
    right_square_witness,
    state_morphism,
)
from bellnc.errors import MembershipError
from bellnc.matfact import bell_factorization, intro_factorization
from bellnc.matrices import SWAP, Matrix
from bellnc.poly import SPACETIME, SPIN, Point, point
from bellnc.scalars import ONE, Scalar
from bellnc.support import SupportingRing, SupportScenario

A = BlowupRing(SupportingRing.from_scenario(SupportScenario.real(1)))
F = intro_factorization()
ua, da, ub, db = SPIN.gens()
ON = point(SPACETIME, 0, 0, 1, 1)
OFF = point(SPACETIME, 1, 0, 0, 0)
ONE2 = Matrix.identity(2)
ONE_S = Matrix.identity(2, SPACETIME)


def U(i, j, ring=None):
    return Matrix.unit(i, j, 2, ring)


def test_phi_tilde_on_basis_tensor():
    (w, left, right), = phi_tilde(TensorElement.basis(0, 0, 0, 0), F)
    assert w == 1
    assert left == U(1, 1, SPIN) * ua
    assert right == U(1, 1, SPIN) * db


def test_phi_tilde_all_ones():
    J = Matrix([[1, 1], [1, 1]])
    t = TensorElement.from_pair(J, J)
    assert collect(phi_tilde(t, F)) == collect([(ONE, F.phi1, F.phi2)])
    assert phi_tilde(TensorElement(), F) == []


def test_mu_examples():
    assert mu(TensorElement.from_pair(ONE2, ONE2)) == ONE2
    assert mu(TensorElement.from_pair(U(1, 2), U(2, 1))) == U(1, 1)
    assert mu(TensorElement.from_pair(SWAP, SWAP)) == ONE2
    with pytest.raises(ValueError):
        mu([(ONE, ONE2, Matrix.identity(3))])


def test_state_morphism_matches_direct_expansion():
    rng = random.Random(2)
    for _ in range(20):
        L = Matrix([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        R = Matrix([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        t = TensorElement.from_pair(L, R)
        assert state_morphism(t, F) == mu(phi_tilde(t, F))


def test_all_ones_gives_bell_polynomial():
    J = Matrix([[1, 1], [1, 1]])
    assert state_morphism(TensorElement.from_pair(J, J), F) == Matrix.identity(2, SPIN) * F.p


def test_eval_tensor():
    assert eval_tensor(ON, RI, ONE_S, ONE_S, A) == TensorElement.from_pair(ONE2, ONE2)
    assert eval_tensor(ON, IR, ONE_S, ONE_S, A) == TensorElement.from_pair(SWAP, SWAP)
    e12 = U(1, 2, SPACETIME)
    assert eval_tensor(OFF, RI, e12, e12, A) == TensorElement.from_pair(U(1, 2), U(1, 2))
    with pytest.raises(MembershipError):
        eval_tensor(ON, RI, U(2, 1, SPACETIME), ONE_S, A)


def test_identity_values():
    assert identity_value(ON, RI, F, A) == ua * db
    assert identity_value(ON, IR, F, A) == -da * ub
    half = bell_factorization("Psi", "pi", scaled=True)
    assert identity_value(OFF, RI, half, A) == ua * db * Fraction(1, 4)


@pytest.mark.parametrize(
    "p, g, case, text",
    [
        (ON, RI, "up-down", "ua*db*C"),
        (ON, IR, "down-up", "da*ub*C"),
        (OFF, RI, "both", "ua*db*C + da*ub*C"),
        (OFF, IR, "both", "ua*db*C + da*ub*C"),
    ],
)
def test_three_cases(p, g, case, text):
    rep = collapse_subspace(p, g, A, F)
    assert rep.case == case == expected_case(p, g, A)
    assert rep.describe() == text
    assert rep.dimension == (1 if case != "both" else 2)


def test_collapse_w_hand_computation_on_support():
    # upper-triangular image: W = span{ua db e11 + ..., ...}; only ua*db 1_2 survives
    rep = collapse_subspace(ON, RI, A, F)
    assert rep.basis == ((Scalar.of(1), Scalar.of(0)),)
    assert rep.shape == "upper-triangular"


def test_grid_cases_and_identity_values():
    pts = [Point(SPACETIME, tuple(map(Scalar.of, c))) for c in itertools.product(range(-1, 2), repeat=4)]
    formal = bell_factorization("Psi", "formal")
    for p in pts:
        for g in (RI, IR):
            rep = collapse_subspace(p, g, A, F)
            assert rep.case == expected_case(p, g, A)
            assert collapse_subspace(p, g, A, formal).case == rep.case
        assert identity_value(p, RI, F, A) == ua * db
        assert identity_value(p, IR, F, A) == -da * ub


def test_support_subspace_inside_off_support_subspace():
    for g in (RI, IR):
        on = set(collapse_subspace(ON, g, A, F).basis)
        off = set(collapse_subspace(OFF, g, A, F).basis)
        assert on <= off


def test_left_square():
    rng = random.Random(3)
    samples = [(random_member(rng, A), random_member(rng, A)) for _ in range(40)]
    for p in (ON, OFF):
        for g in (RI, IR):
            assert left_square_check(p, g, samples, A)
    z = SPACETIME.var("z")
    assert left_square_check(ON, IR, [(U(1, 2, SPACETIME), U(2, 2, SPACETIME) * z)], A)
    assert left_square_check(ON, RI, [(ONE_S, ONE_S)], A)


def test_right_square_witness():
    t1, t2, m1, m2 = right_square_witness(F)
    assert t1 == TensorElement.from_pair(ONE2, ONE2)
    assert t2 == TensorElement.from_pair(SWAP, SWAP)
    assert mu(t1) == mu(t2) == ONE2
    assert m1 == Matrix.identity(2, SPIN) * (ua * db)
    assert m2 == Matrix.identity(2, SPIN) * (-da * ub)
    assert m1[0, 0].terms != m2[0, 0].terms
