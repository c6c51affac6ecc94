"""States with matrix coefficients, their density matrices, and the Born rule.

A state is ``sum_i c_i |i>`` with every ``c_i`` an n x n matrix.  Its density
matrix is the m x m block matrix with blocks ``c_i c_j^dagger``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NormalizationError
from .matrices import Matrix
from .poly import SPIN
from .scalars import INV_SQRT2, ZERO, Scalar, e_i_theta


@dataclass(frozen=True)
class Basis:
    labels: tuple
    gram: Matrix = None
    kets: tuple = None  # optional realization of each ket as a Poly

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.gram is None:
            object.__setattr__(self, "gram", Matrix.identity(len(self.labels)))
        if self.gram.size != len(self.labels):
            raise ValueError("Gram matrix size does not match the basis")
        if self.gram.dagger() != self.gram or any(self.gram[i, i] != 1 for i in range(self.gram.size)):
            raise ValueError("Gram matrix must be Hermitian with unit diagonal")
        if self.kets is not None:
            object.__setattr__(self, "kets", tuple(self.kets))

    def __len__(self):
        return len(self.labels)


@dataclass(frozen=True)
class MState:
    basis: Basis
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if len(coeffs) != len(self.basis):
            raise ValueError("one coefficient matrix per basis ket is required")
        sizes = {c.shape for c in coeffs}
        if len(sizes) != 1 or next(iter(sizes))[0] != next(iter(sizes))[1]:
            raise ValueError("coefficients must be square matrices of one size")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def n(self) -> int:
        return self.coefficients[0].size

    def is_polynomial(self) -> bool:
        return any(c.varset is not None for c in self.coefficients)

    def scaled(self, a) -> "MState":
        return MState(self.basis, tuple(c * Scalar.of(a) for c in self.coefficients))

    def __add__(self, other: "MState") -> "MState":
        if other.basis != self.basis:
            raise ValueError("basis mismatch")
        return MState(self.basis, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def to_matrix(self) -> Matrix:
        """The element sum_i c_i * ket_i of M_n(B)."""
        if self.basis.kets is None:
            raise ValueError("basis has no ket realization")
        total = None
        for c, ket in zip(self.coefficients, self.basis.kets):
            term = c * ket
            total = term if total is None else total + term
        return total

    def specialize_theta(self, theta_case: str) -> "MState":
        return MState(self.basis, tuple(c.specialize_theta(theta_case) for c in self.coefficients))


@dataclass(frozen=True)
class DensityMatrix:
    blocks: tuple  # m x m tuple of n x n Matrix

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return self.blocks[0][0].size

    def __matmul__(self, other: "DensityMatrix") -> "DensityMatrix":
        m = self.m
        out = []
        for i in range(m):
            row = []
            for k in range(m):
                acc = self.blocks[i][0] @ other.blocks[0][k]
                for j in range(1, m):
                    acc = acc + self.blocks[i][j] @ other.blocks[j][k]
                row.append(acc)
            out.append(tuple(row))
        return DensityMatrix(tuple(out))

    def __add__(self, other: "DensityMatrix") -> "DensityMatrix":
        return DensityMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.blocks, other.blocks))
        )

    def scale(self, a) -> "DensityMatrix":
        a = Scalar.of(a)
        return DensityMatrix(tuple(tuple(b * a for b in row) for row in self.blocks))

    def is_hermitian(self) -> bool:
        return all(
            self.blocks[i][j] == self.blocks[j][i].dagger() for i in range(self.m) for j in range(self.m)
        )

    def specialize_theta(self, theta_case: str) -> "DensityMatrix":
        return DensityMatrix(tuple(tuple(b.specialize_theta(theta_case) for b in r) for r in self.blocks))

    def as_matrix(self) -> Matrix:
        """Flatten to one mn x mn matrix."""
        rows = []
        for brow in self.blocks:
            for r in range(self.n):
                rows.append([e for b in brow for e in b.rows[r]])
        return Matrix(rows)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(b) for b in row) + "]" for row in self.blocks) + "]"


def _require_scalar(s: MState):
    if s.is_polynomial():
        raise TypeError("density matrices need scalar-valued coefficients")


def density(s: MState) -> DensityMatrix:
    _require_scalar(s)
    cs = s.coefficients
    daggers = [c.dagger() for c in cs]
    return DensityMatrix(tuple(tuple(ci @ dj for dj in daggers) for ci in cs))


outer = density


def partial_trace(rho: DensityMatrix) -> Matrix:
    acc = rho.blocks[0][0]
    for i in range(1, rho.m):
        acc = acc + rho.blocks[i][i]
    return acc


def full_trace(rho: DensityMatrix) -> Scalar:
    return partial_trace(rho).trace()


def is_pure(rho: DensityMatrix) -> bool:
    return rho @ rho == rho


def norm_squared(s: MState) -> Scalar:
    """sum_i tr(c_i^dagger c_i)."""
    total = ZERO
    for c in s.coefficients:
        total = total + (c.dagger() @ c).trace()
    return total


def is_normalized(s: MState) -> bool:
    return norm_squared(s) == 1


def is_partially_normalized(s: MState) -> bool:
    return partial_trace(density(s)) == Matrix.identity(s.n)


def born_probabilities(s: MState):
    _require_scalar(s)
    if not is_normalized(s):
        raise NormalizationError(f"state is not normalized: sum tr(c^dagger c) = {norm_squared(s)}")
    return [(c.dagger() @ c).trace() for c in s.coefficients]


def born_weights(s: MState):
    """tr(c_i^dagger c_i) without the normalization precondition."""
    return [(c.dagger() @ c).trace() for c in s.coefficients]


def inner(s: MState, t: MState) -> Scalar:
    if s.basis != t.basis or s.n != t.n:
        raise ValueError("basis mismatch")
    total = ZERO
    g = s.basis.gram
    for i, ci in enumerate(s.coefficients):
        cid = ci.dagger()
        for j, dj in enumerate(t.coefficients):
            if g[i, j]:
                total = total + (cid @ dj).trace() * g[i, j]
    return total


def verify_ensemble(rho: DensityMatrix, parts) -> bool:
    """rho == sum_k w_k |s_k><s_k| exactly."""
    parts = list(parts)
    weights = [Scalar.of(w) for w, _ in parts]
    if any(not w or not w.is_nonnegative_real() for w in weights):
        raise ValueError("ensemble weights must be positive")
    if sum(weights, ZERO) != 1:
        raise ValueError("ensemble weights must sum to 1")
    total = None
    for w, s in zip(weights, parts):
        term = outer(s[1]).scale(w)
        total = term if total is None else total + term
    return total == rho


def _scalar_multiple_of_identity(c: Matrix) -> bool:
    d = c[0, 0]
    return all((e == d) if i == j else not e for (i, j), e in c.entries())


def is_emergent(s: MState) -> bool:
    return is_partially_normalized(s) and all(_scalar_multiple_of_identity(c) for c in s.coefficients)


def verify_separable_witness(psi, f1: Matrix, f2: Matrix) -> bool:
    """psi == f1 f2 == f2 f1 in M_n(B)."""
    target = psi.to_matrix() if isinstance(psi, MState) else psi
    return f1 @ f2 == target and f2 @ f1 == target


# the catalog of states used for Bell-state emergence --------------------

def _spin_kets(*names):
    g = dict(zip(SPIN.names, SPIN.gens()))
    out = []
    for name in names:
        f = SPIN.one()
        for v in name.split("*"):
            f = f * g[v]
        out.append(f)
    return tuple(out)


PSI_BASIS = Basis(("ua*db", "da*ub"), kets=_spin_kets("ua*db", "da*ub"))
PHI_BASIS = Basis(("ua*ub", "da*db"), kets=_spin_kets("ua*ub", "da*db"))
SPIN_BASIS = Basis(SPIN.names, kets=SPIN.gens())


def phase(theta: str = "formal") -> Scalar:
    """e^{i theta} as a Scalar: -xi^2, or its value at theta = 0 / pi."""
    p = e_i_theta()
    return p if theta == "formal" else p.specialize_theta(theta)


def bell_state(which: str = "Psi", theta: str = "formal") -> MState:
    """Normalized Bell state with 1 x 1 coefficients."""
    basis = PSI_BASIS if which == "Psi" else PHI_BASIS
    return MState(basis, (Matrix([[INV_SQRT2]]), Matrix([[INV_SQRT2 * phase(theta)]])))


def emergent_bell_state(theta: str = "formal", normalized: bool = True) -> MState:
    """Bell state times 1_2.

    ``normalized`` gives full trace 1 (coefficients 1/2 and e^{i theta}/2);
    otherwise the partially normalized version with 1/sqrt(2) coefficients.
    """
    a = Scalar.of(Fraction(1, 2)) if normalized else INV_SQRT2
    one = Matrix.identity(2)
    return MState(PSI_BASIS, (one * a, one * (a * phase(theta))))


def diagonal_component(i: int, theta: str = "formal") -> MState:
    """(1/sqrt 2) eps_ii (ua db + e^{i theta} da ub)."""
    e = Matrix.unit(i, i)
    return MState(PSI_BASIS, (e * INV_SQRT2, e * (INV_SQRT2 * phase(theta))))


def state_from_linear_matrix(M: Matrix, basis: Basis = SPIN_BASIS) -> MState:
    """Read a matrix of linear forms in the ket variables as a state."""
    coeffs = []
    for ket in basis.kets:
        (e,) = ket.terms
        coeffs.append(M.map(lambda f, e=e: f.terms.get(e, ZERO)))
    # every term must be one of the kets
    if MState(basis, tuple(coeffs)).to_matrix() != M:
        raise ValueError("matrix is not linear in the basis kets")
    return MState(basis, tuple(coeffs))


def factor_states(theta: str = "formal"):
    """The half-scaled factor matrices phi1, phi2 as states over (ua, da, ub, db)."""
    from .matfact import bell_factorization

    F = bell_factorization("Psi", theta, scaled=True)
    return state_from_linear_matrix(F.phi1), state_from_linear_matrix(F.phi2)


def column_states(theta: str = "formal"):
    """eta_ij = sqrt(2) phi_i eps_jj, the column states of the factors."""
    phis = factor_states(theta)
    root2 = Scalar.of(2) * INV_SQRT2
    return {
        (i + 1, j): MState(SPIN_BASIS, tuple(c @ Matrix.unit(j, j) * root2 for c in phi.coefficients))
        for i, phi in enumerate(phis)
        for j in (1, 2)
    }


def random_catalog_state(rng, m: int = 2, n: int = 2, basis: Basis = None) -> MState:
    """Random state whose coefficients are sums of monomial multiples of distinct matrix units."""
    basis = basis or Basis(tuple(f"k{i}" for i in range(m)))
    slots = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]

    def rat():
        return Fraction(rng.randint(-4, 4), rng.randint(1, 3))

    coeffs = []
    for _ in range(len(basis)):
        c = Matrix.zeros(n)
        for i, j in rng.sample(slots, rng.randint(0, 2)):
            a = Scalar.from_components(rat(), rat(), rat(), rat(), rng.randint(-2, 2))
            c = c + Matrix.unit(i, j, n) * a
        coeffs.append(c)
    return MState(basis, tuple(coeffs))
