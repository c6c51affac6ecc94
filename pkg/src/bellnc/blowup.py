"""The endomorphism ring A = end_R(R + I) = [[R, S], [I, S]] inside M_2(S).

A is handled extensionally: a membership predicate, plus a finite generating
family whose evaluations span the image algebra at any point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import MembershipError
from .linalg import rank
from .matrices import ID2, SWAP, Matrix
from .poly import SPACETIME, Point, Poly
from .support import SupportingRing, i_member, in_zero_locus, r_member


@dataclass(frozen=True)
class Ordering:
    """Summand ordering R+I (g = 1) or I+R (g = swap)."""

    tag: str
    g: Matrix

    @property
    def g_inv(self) -> Matrix:
        return self.g  # both choices are involutions

    def conjugate(self, M: Matrix) -> Matrix:
        return self.g @ M @ self.g_inv


RI = Ordering("RI", ID2)
IR = Ordering("IR", SWAP)
ORDERINGS = {"RI": RI, "IR": IR}


@dataclass(frozen=True)
class BlowupRing:
    ring: SupportingRing

    @property
    def ideal(self):
        return self.ring.ideal


@dataclass(frozen=True)
class EvalImage:
    matrix: Matrix
    shape: str  # full, upper-triangular, or lower-triangular (upper conjugated by swap)
    point: Point
    ordering: Ordering


class RepDims(NamedTuple):
    d11: int  # dim rho(e11 A e11)
    dA11: int  # dim rho(A e11), the column condition
    d11A: int  # dim rho(e11 A), the row condition

    def column_condition(self, d_a: int = 2) -> bool:
        return self.d11 == 1 and self.dA11 == d_a

    def row_condition(self, d_a: int = 2) -> bool:
        return self.d11 == 1 and self.d11A == d_a


def a_member(M: Matrix, A: BlowupRing) -> bool:
    if M.shape != (2, 2):
        return False
    return r_member(M[0, 0], A.ring) and i_member(M[1, 0], A.ring)


def image_shape(p: Point, A: BlowupRing, g: Ordering = RI) -> str:
    if not in_zero_locus(p, A.ideal):
        return "full"
    return "upper-triangular" if g.tag == "RI" else "lower-triangular"


def eval_rep(M: Matrix, p: Point, g: Ordering, A: BlowupRing) -> EvalImage:
    """g * M(p) * g^-1."""
    if not a_member(M, A):
        raise MembershipError(f"{M} is not a member of A")
    return EvalImage(g.conjugate(M.evaluate(p)), image_shape(p, A, g), p, g)


def generators(A: BlowupRing):
    """e11, e12, e22 and q e21 for each generator q of I."""
    e = lambda i, j: Matrix.unit(i, j, 2, SPACETIME)  # noqa: E731
    gens = [e(1, 1), e(1, 2), e(2, 2)]
    gens += [e(2, 1) * q for q in A.ideal.generators]
    return gens


@lru_cache(maxsize=64)
def generating_family(A: BlowupRing, length: int = 2):
    """Generators closed under products of at most ``length`` factors."""
    gens = generators(A)
    family = list(gens)
    layer = list(gens)
    for _ in range(length - 1):
        layer = [a @ b for a in layer for b in gens]
        family.extend(layer)
    seen = set()
    out = []
    for M in family:
        if M not in seen:
            seen.add(M)
            out.append(M)
    return tuple(out)


def evaluated_family(p: Point, A: BlowupRing, length: int = 2):
    return _evaluated_family(p, A, length)


@lru_cache(maxsize=4096)
def _evaluated_family(p, A, length):
    return tuple(M.evaluate(p) for M in generating_family(A, length))


def _vec(M: Matrix):
    return [e for row in M.rows for e in row]


def image_algebra_dim(p: Point, A: BlowupRing, length: int = 2) -> int:
    return rank([_vec(M) for M in evaluated_family(p, A, length)])


def image_basis(p: Point, A: BlowupRing, length: int = 2):
    """Canonical basis (rref in slot order 11, 12, 21, 22) of the RI image algebra."""
    from .linalg import span_basis

    rows = span_basis([_vec(M) for M in evaluated_family(p, A, length)])
    return [Matrix([r[:2], r[2:]]) for r in rows]


def is_simple_point(p: Point, A: BlowupRing) -> bool:
    return image_algebra_dim(p, A) == 4


def rep_dims(p: Point, A: BlowupRing) -> RepDims:
    e11 = Matrix.unit(1, 1)
    images = evaluated_family(p, A)
    return RepDims(
        rank([_vec(e11 @ X @ e11) for X in images]),
        rank([_vec(X @ e11) for X in images]),
        rank([_vec(e11 @ X) for X in images]),
    )


def _commutes(X: Matrix, Y: Matrix) -> bool:
    return X @ Y == Y @ X


def _scalar_form(M: Matrix):
    if M[0, 1] or M[1, 0] or M[0, 0] != M[1, 1]:
        return None
    return M[0, 0]


def center_check(A: BlowupRing, samples, candidates=None) -> bool:
    """r 1_2 is central for sampled r in R, and sampled central members are of that form."""
    samples = list(samples)
    for r in samples:
        if not r_member(r, A.ring):
            raise MembershipError(f"sample {r} is not in R")
    family = generating_family(A)
    one = Matrix.identity(2, SPACETIME)
    for r in samples:
        Z = one * r
        if not a_member(Z, A) or not all(_commutes(Z, X) for X in family):
            return False
    if candidates is None:
        e = lambda i, j: Matrix.unit(i, j, 2, SPACETIME)  # noqa: E731
        candidates = list(family)
        for r in samples:
            candidates += [one * r, e(1, 1) * r, e(1, 2) * r, e(2, 2) * r, one * r + e(1, 2)]
    for M in candidates:
        if not a_member(M, A) or not all(_commutes(M, X) for X in family):
            continue
        r = _scalar_form(M)
        if r is None or not r_member(r, A.ring):
            return False
    return True


# random members ----------------------------------------------------------


def random_poly(rng: random.Random, degree: int = 2, terms: int = 3, coeff: int = 3) -> Poly:
    n = len(SPACETIME)
    out = {}
    for _ in range(rng.randint(0, terms)):
        e = [0] * n
        for _ in range(rng.randint(0, degree)):
            e[rng.randrange(n)] += 1
        out[tuple(e)] = rng.randint(-coeff, coeff)
    return Poly(SPACETIME, out)


def random_ideal_element(rng: random.Random, A: BlowupRing) -> Poly:
    acc = SPACETIME.zero()
    for q in A.ideal.generators:
        acc = acc + random_poly(rng, degree=1, terms=2) * q
    return acc


def random_member(rng: random.Random, A: BlowupRing) -> Matrix:
    r = SPACETIME.const(rng.randint(-3, 3)) + random_ideal_element(rng, A)
    return Matrix([[r, random_poly(rng)], [random_ideal_element(rng, A), random_poly(rng)]])
