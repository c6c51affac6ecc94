import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bellnc.errors import NormalizationError
from bellnc.matfact import bell_factorization, intro_factorization
from bellnc.matrices import Matrix
from bellnc.mstates import (
    PSI_BASIS,
    Basis,
    MState,
    bell_state,
    born_probabilities,
    born_weights,
    column_states,
    density,
    diagonal_component,
    emergent_bell_state,
    factor_states,
    full_trace,
    inner,
    is_emergent,
    is_normalized,
    is_partially_normalized,
    is_pure,
    norm_squared,
    partial_trace,
    verify_ensemble,
    verify_separable_witness,
)
from bellnc.poly import SPIN
from bellnc.scalars import INV_SQRT2, XI, Scalar, e_i_theta
from strategies import catalog_states, close, numeric, numeric_matrix, scalars

HALF = Fraction(1, 2)
ua, da, ub, db = SPIN.gens()
E11, E22 = Matrix.unit(1, 1), Matrix.unit(2, 2)


def test_bell_density_at_theta_zero():
    rho = density(bell_state("Psi", "zero"))
    assert [[b[0, 0] for b in row] for row in rho.blocks] == [[HALF, HALF], [HALF, HALF]]
    assert is_pure(rho)
    assert full_trace(rho) == 1


def test_bell_density_formal_theta_has_phases():
    rho = density(bell_state("Psi"))
    e = e_i_theta()
    assert rho.blocks[0][1][0, 0] == e.conj() * HALF
    assert rho.blocks[1][0][0, 0] == e * HALF
    assert rho.blocks[0][1][0, 0] == -(XI**-2) * HALF
    assert is_pure(rho)


def test_density_agrees_with_float_oracle():
    s = diagonal_component(1)
    rho = density(s)
    for theta in (0.0, 1.1, math.pi):
        c = [numeric_matrix(ci, theta) for ci in s.coefficients]
        for i in range(2):
            for j in range(2):
                want = [
                    [sum(c[i][r][k] * c[j][q][k].conjugate() for k in range(2)) for q in range(2)] for r in range(2)
                ]
                got = numeric_matrix(rho.blocks[i][j], theta)
                assert all(close(got[r][q], want[r][q]) for r in range(2) for q in range(2))


def test_psi1_density_display():
    rho = density(diagonal_component(1))
    e = e_i_theta()
    assert rho.blocks[0][0] == E11 * HALF
    assert rho.blocks[0][1] == E11 * (e.conj() * HALF)
    assert rho.blocks[1][0] == E11 * (e * HALF)


def test_eta11_density():
    etas = column_states()
    rho = density(etas[(1, 1)])
    # eta11 = (1/sqrt 2)(e11 ua + xi e21 ub): only the ua and ub blocks are nonzero
    labels = SPIN.names
    ia, ib = labels.index("ua"), labels.index("ub")
    assert rho.blocks[ia][ia] == E11 * HALF
    assert rho.blocks[ib][ib] == Matrix.unit(2, 2) * HALF
    assert rho.blocks[ia][ib] == Matrix.unit(1, 2) * (XI.conj() * HALF)
    assert is_pure(rho)


def test_emergent_state_square_law():
    rho = density(emergent_bell_state())
    sq = rho @ rho
    assert sq == rho.scale(HALF)
    assert sq != rho.scale(Fraction(1, 4))
    assert not is_pure(rho)
    assert is_pure(rho.scale(2))
    assert partial_trace(rho.scale(2)) == Matrix.identity(2)


def test_factor_states_square_law():
    for phi in factor_states():
        rho = density(phi)
        assert rho @ rho == rho.scale(HALF)
        assert is_pure(rho.scale(2))


def test_separable_witnesses():
    psi = emergent_bell_state()
    F = bell_factorization("Psi", scaled=True)
    assert verify_separable_witness(psi, F.phi1 * 2, F.phi2)
    intro = intro_factorization()
    assert verify_separable_witness(Matrix.identity(2, SPIN) * (ua * db - da * ub), intro.phi1, intro.phi2)
    assert not verify_separable_witness(psi, Matrix.zeros(2, SPIN), F.phi2)


def test_ensembles():
    rho = density(emergent_bell_state())
    assert verify_ensemble(rho, [(HALF, diagonal_component(1)), (HALF, diagonal_component(2))])
    etas = column_states()
    for i, phi in enumerate(factor_states(), 1):
        assert verify_ensemble(density(phi), [(HALF, etas[(i, 1)]), (HALF, etas[(i, 2)])])
    bell = bell_state("Psi", "zero")
    assert verify_ensemble(density(bell), [(1, bell)])


def test_ensemble_weight_validation():
    rho = density(bell_state())
    with pytest.raises(ValueError):
        verify_ensemble(rho, [(HALF, bell_state())])
    with pytest.raises(ValueError):
        verify_ensemble(rho, [(-1, bell_state()), (2, bell_state())])


def test_column_states_pure_with_unit_trace():
    for eta in column_states().values():
        rho = density(eta)
        assert is_pure(rho)
        assert full_trace(rho) == 1


def test_born_rule():
    assert born_probabilities(diagonal_component(1)) == [HALF, HALF]
    assert born_probabilities(bell_state()) == [HALF, HALF]
    basis_state = MState(PSI_BASIS, (E11, Matrix.zeros(2)))
    assert born_probabilities(basis_state) == [1, 0]
    with pytest.raises(NormalizationError):
        born_probabilities(MState(PSI_BASIS, (Matrix.identity(2), Matrix.zeros(2))))


def test_inner_products():
    p1, p2 = diagonal_component(1), diagonal_component(2)
    assert inner(p1, p2) == 0
    assert inner(p1, p1) == 1
    zero = MState(PSI_BASIS, (Matrix.zeros(2), Matrix.zeros(2)))
    assert inner(zero, p1) == 0


def test_inner_uses_gram_matrix():
    g = Matrix([[1, HALF], [HALF, 1]])
    B = Basis(("a", "b"), g)
    s = MState(B, (Matrix([[1]]), Matrix([[1]])))
    assert inner(s, s) == 3


def test_gram_must_be_hermitian_with_unit_diagonal():
    with pytest.raises(ValueError):
        Basis(("a", "b"), Matrix([[1, 1], [0, 1]]))
    with pytest.raises(ValueError):
        Basis(("a", "b"), Matrix([[2, 0], [0, 1]]))


def test_emergence():
    assert is_emergent(emergent_bell_state(normalized=False))
    # coefficients 1/2 1_2 give partial trace 1/2 1_2, so this one is not emergent
    assert not is_emergent(emergent_bell_state(normalized=True))
    assert not is_emergent(factor_states()[0])
    zero = MState(PSI_BASIS, (Matrix.zeros(2), Matrix.zeros(2)))
    assert not is_emergent(zero)


def test_normalization_predicates():
    s = emergent_bell_state()
    assert is_normalized(s)
    assert not is_partially_normalized(s)
    assert is_partially_normalized(emergent_bell_state(normalized=False))


def test_traces():
    assert full_trace(density(bell_state())) == 1
    zero = MState(PSI_BASIS, (Matrix.zeros(2), Matrix.zeros(2)))
    assert full_trace(density(zero)) == 0


def test_polynomial_coefficients_rejected():
    s = MState(PSI_BASIS, (Matrix.identity(2, SPIN) * ua, Matrix.zeros(2, SPIN)))
    with pytest.raises(TypeError):
        density(s)


@settings(max_examples=500, deadline=None)
@given(catalog_states())
def test_density_is_hermitian(s):
    assert density(s).is_hermitian()


@settings(max_examples=500, deadline=None)
@given(catalog_states())
def test_born_weights_sum_to_trace(s):
    rho = density(s)
    assert sum(born_weights(s), Scalar.of(0)) == full_trace(rho)
    assert full_trace(rho) == partial_trace(rho).trace()
    # normalized iff unit full trace
    assert (norm_squared(s) == 1) == (full_trace(rho) == 1)


@settings(max_examples=500, deadline=None)
@given(catalog_states(), catalog_states(), catalog_states(), scalars())
def test_inner_is_sesquilinear(s, t, u, a):
    assert inner(s, t.scaled(a) + u) == a * inner(s, t) + inner(s, u)
    assert inner(s.scaled(a), t) == a.conj() * inner(s, t)
    assert inner(s, t) == inner(t, s).conj()


@settings(max_examples=500, deadline=None)
@given(catalog_states())
def test_self_inner_product_is_nonnegative(s):
    v = inner(s, s)
    assert v.is_xi_free()
    assert v.is_nonnegative_real()
    assert abs(numeric(v, 0.3).imag) < 1e-9


@settings(max_examples=100, deadline=None)
@given(catalog_states(), st.sampled_from([0.0, 0.9, math.pi]))
def test_self_inner_product_float_oracle(s, theta):
    want = sum(abs(e) ** 2 for c in s.coefficients for row in numeric_matrix(c, theta) for e in row)
    assert close(numeric(inner(s, s), theta), want)


def test_inv_sqrt2_normalization():
    assert INV_SQRT2 * INV_SQRT2 * 2 == 1
