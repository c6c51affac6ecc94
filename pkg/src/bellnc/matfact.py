"""Matrix factorizations phi1 phi2 = phi2 phi1 = p * 1_n over polynomial rings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FactorizationError, NotInvertibleError
from .matrices import SWAP, Matrix
from .poly import SPACETIME, SPIN, Poly, VarSet
from .scalars import XI, I, Scalar, e_i_theta

# a PolyMatrix is a Matrix whose entries are Polys over one VarSet
PolyMatrix = Matrix

XYZW = VarSet(("x", "y", "z", "w"), "extended")


@dataclass(frozen=True)
class MatrixFactorization:
    p: Poly
    phi1: Matrix
    phi2: Matrix

    @property
    def size(self) -> int:
        return self.phi1.size

    def specialize_theta(self, theta_case: str) -> "MatrixFactorization":
        return verify_factorization(
            self.p.specialize_theta(theta_case),
            self.phi1.specialize_theta(theta_case),
            self.phi2.specialize_theta(theta_case),
        )

    def scaled(self, c1, c2) -> "MatrixFactorization":
        """(c1 phi1, c2 phi2) factorizes c1 c2 p."""
        c1, c2 = Scalar.of(c1), Scalar.of(c2)
        return verify_factorization(self.p * (c1 * c2), self.phi1 * c1, self.phi2 * c2)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if A.size != B.size:
        raise ValueError(f"size mismatch {A.size} vs {B.size}")
    return A @ B


def _first_mismatch(M: Matrix, target: Matrix):
    for (i, j), e in M.entries():
        if e != target[i, j]:
            return (i, j), e - target[i, j]
    return None


def verify_factorization(p: Poly, A: Matrix, B: Matrix) -> MatrixFactorization:
    """Check A B = B A = p 1_n exactly; raise FactorizationError otherwise."""
    if A.shape != B.shape or A.shape[0] != A.shape[1]:
        raise FactorizationError(f"need square matrices of equal size, got {A.shape} and {B.shape}")
    target = Matrix.identity(A.size, p.varset) * p
    for label, prod in (("phi1*phi2", A @ B), ("phi2*phi1", B @ A)):
        bad = _first_mismatch(prod, target)
        if bad:
            (i, j), residual = bad
            raise FactorizationError(
                f"{label} differs from p*1 at entry ({i + 1}, {j + 1}): residual {residual}",
                index=(i + 1, j + 1),
                residual=residual,
            )
    return MatrixFactorization(p, A, B)


def is_factorization(p: Poly, A: Matrix, B: Matrix) -> bool:
    try:
        verify_factorization(p, A, B)
    except FactorizationError:
        return False
    return True


# named factorizations ---------------------------------------------------


def xy_minus_zw() -> MatrixFactorization:
    x, y, z, w = XYZW.gens()
    return verify_factorization(x * y - z * w, Matrix([[x, z], [w, y]]), Matrix([[y, -z], [-w, x]]))


def mf2_generic() -> MatrixFactorization:
    """(xy + e^{i theta} zw) 1_2 with xi formal."""
    x, y, z, w = XYZW.gens()
    return verify_factorization(
        x * y + e_i_theta() * z * w,
        Matrix([[x, XI * z], [XI * w, y]]),
        Matrix([[y, -XI * z], [-XI * w, x]]),
    )


def _substitute(F: MatrixFactorization, names, target: VarSet) -> MatrixFactorization:
    """Rename x, y, z, w to the given variables of ``target``."""
    renamed = VarSet(tuple(names), target.designation)

    def move(f: Poly) -> Poly:
        return Poly(renamed, f.terms).embed(target)

    return verify_factorization(move(F.p), F.phi1.map(move), F.phi2.map(move))


PSI_VARS = ("ua", "db", "da", "ub")
PHI_VARS = ("ua", "ub", "da", "db")


def bell_factorization(which: str = "Psi", theta: str = "formal", scaled: bool = False) -> MatrixFactorization:
    """Factorization of the (unnormalized) Bell polynomial.

    ``Psi`` substitutes (x, y, z, w) -> (ua, db, da, ub), ``Phi`` uses
    (ua, ub, da, db).  ``theta`` is ``formal`` (xi kept symbolic), ``zero`` or
    ``pi``; ``Psi`` at ``pi`` returns the sign convention
    [[ua, da], [ub, db]] [[db, -da], [-ub, ua]], which differs from the
    xi = -1 specialization by conjugation with diag(1, -1).  ``scaled``
    multiplies both matrices by 1/2.
    """
    if which not in ("Psi", "Phi"):
        raise ValueError(f"unknown Bell state {which!r}")
    if which == "Psi" and theta == "pi":
        ua, da, ub, db = SPIN.gens()
        F = verify_factorization(ua * db - da * ub, Matrix([[ua, da], [ub, db]]), Matrix([[db, -da], [-ub, ua]]))
    else:
        F = _substitute(mf2_generic(), PSI_VARS if which == "Psi" else PHI_VARS, SPIN)
        if theta != "formal":
            F = F.specialize_theta(theta)
    if scaled:
        F = F.scaled(Fraction(1, 2), Fraction(1, 2))
    return F


def intro_factorization() -> MatrixFactorization:
    return bell_factorization("Psi", "pi")


def swapped_intro_factorization() -> MatrixFactorization:
    """The factorization with the roles of the two summand orderings exchanged."""
    ua, da, ub, db = SPIN.gens()
    return verify_factorization(ua * db - da * ub, Matrix([[ub, db], [ua, da]]), Matrix([[-da, db], [ua, -ub]]))


def pauli():
    return (
        Matrix([[0, 1], [1, 0]]),
        Matrix([[0, -I], [I, 0]]),
        Matrix([[1, 0], [0, -1]]),
    )


def _blocks(a, b, c, d):
    return Matrix([ra + rb for ra, rb in zip(a.rows, b.rows)] + [rc + rd for rc, rd in zip(c.rows, d.rows)])


def gamma_matrices():
    one = Matrix.identity(2)
    zero = Matrix.zeros(2)
    g0 = _blocks(one, zero, zero, -one)
    return (g0,) + tuple(_blocks(zero, s, -s, zero) for s in pauli())


def dirac_factorization() -> MatrixFactorization:
    """(t^2 - x^2 - y^2 - z^2) 1_4 = (g0 t + g1 x + g2 y + g3 z)^2."""
    x, y, z, t = SPACETIME.gens()
    g0, g1, g2, g3 = gamma_matrices()
    D = g0 * t + g1 * x + g2 * y + g3 * z
    return verify_factorization(t * t - x * x - y * y - z * z, D, D)


# isomorphism ------------------------------------------------------------


def _constant_inverse(s: Matrix) -> Matrix:
    if s.varset is not None and not all(e.is_constant() for _, e in s.entries()):
        raise NotInvertibleError("witness matrices must have constant entries")
    return s.inverse()


def check_factorization_iso(F: MatrixFactorization, F2: MatrixFactorization, s1: Matrix, s2: Matrix) -> bool:
    """phi1' = s2^-1 phi1 s1 and phi2' = s1^-1 phi2 s2."""
    s1_inv = _constant_inverse(s1)
    s2_inv = _constant_inverse(s2)
    return s2_inv @ F.phi1 @ s1 == F2.phi1 and s1_inv @ F.phi2 @ s2 == F2.phi2


SIGN_FLIP = Matrix([[1, 0], [0, -1]])
__all__ = [
    "MatrixFactorization",
    "PolyMatrix",
    "SWAP",
    "SIGN_FLIP",
    "bell_factorization",
    "check_factorization_iso",
    "dirac_factorization",
    "intro_factorization",
    "matmul",
    "mf2_generic",
    "swapped_intro_factorization",
    "verify_factorization",
    "xy_minus_zw",
]
