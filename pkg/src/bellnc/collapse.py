"""The state morphism mu . phi~ and the collapse subspace at a spacetime point.

``phi~`` sends the basis tensor e_ij (x) e_kl of M_2(C) (x) M_2(C) to
(e_ii phi1 e_jj) (x) (e_kk phi2 e_ll) and is extended linearly; ``mu`` is
matrix multiplication.  At a point p with summand ordering g, the image of
A (x) A is spanned by the pairs (g X, Y g^-1) with X, Y running over a basis
of the evaluated image algebra; the collapse subspace is the set of b in B
with b * 1_2 in the span of their state-morphism images.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .blowup import BlowupRing, Ordering, a_member, image_basis, image_shape
from .errors import MembershipError
from .linalg import in_span, intersect_spans, rank
from .matfact import MatrixFactorization
from .matrices import Matrix
from .poly import SPIN, Point, Poly
from .scalars import ONE, ZERO, Scalar
from .support import in_zero_locus

UP_DOWN = (1, 0, 0, 1)  # ua*db
DOWN_UP = (0, 1, 1, 0)  # da*ub


class TensorElement:
    """Element of M_2(C) (x) M_2(C) collected on the basis e_ij (x) e_kl (0-based)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: Scalar.of(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def basis(cls, i, j, k, l):
        return cls({(i, j, k, l): ONE})

    @classmethod
    def from_pair(cls, left: Matrix, right: Matrix) -> "TensorElement":
        out = {}
        for (i, j), a in left.entries():
            if not a:
                continue
            for (k, l), b in right.entries():
                if b:
                    out[(i, j, k, l)] = a * b
        return cls(out)

    def __add__(self, other):
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, ZERO) + v
        return TensorElement(acc)

    def scale(self, c):
        c = Scalar.of(c)
        return TensorElement({k: c * v for k, v in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        parts = [f"({c})*e{i + 1}{j + 1}(x)e{k + 1}{l + 1}" for (i, j, k, l), c in sorted(self.coeffs.items())]
        return "TensorElement(" + (" + ".join(parts) or "0") + ")"


def _single(n, i, j, value, ring):
    rows = [[ring.zero() for _ in range(n)] for _ in range(n)]
    rows[i][j] = value
    return Matrix(rows)


def phi_tilde(t: TensorElement, F: MatrixFactorization):
    """Formal sum [(weight, left, right)] in M_2(B) (x) M_2(B)."""
    vs = F.phi1.varset
    out = []
    for (i, j, k, l), c in sorted(t.coeffs.items()):
        left = _single(2, i, j, F.phi1[i, j], vs)
        right = _single(2, k, l, F.phi2[k, l], vs)
        out.append((c, left, right))
    return out


def collect(formal_sum):
    """Collect a formal sum over B on the basis e_ij (x) e_kl (coefficients in B)."""
    acc = {}
    for w, left, right in formal_sum:
        for (i, j), a in left.entries():
            for (k, l), b in right.entries():
                v = a * b * w
                if v:
                    key = (i, j, k, l)
                    acc[key] = acc[key] + v if key in acc else v
    return {k: v for k, v in acc.items() if v}


def mu(t):
    """Multiplication map on a TensorElement or a formal sum of matrix pairs."""
    if isinstance(t, TensorElement):
        total = Matrix.zeros(2)
        for (i, j, k, l), c in t.coeffs.items():
            if j == k:
                total = total + Matrix.unit(i + 1, l + 1) * c
        return total
    total = None
    for w, left, right in t:
        if left.size != right.size:
            raise ValueError("size mismatch")
        term = (left @ right) * w
        total = term if total is None else total + term
    return total


@lru_cache(maxsize=256)
def _basis_image(F: MatrixFactorization, i, j, k, l) -> Matrix:
    return mu(phi_tilde(TensorElement.basis(i, j, k, l), F))


def state_morphism(t: TensorElement, F: MatrixFactorization) -> Matrix:
    """mu(phi~(t)), using linearity over the 16 basis tensors."""
    vs = F.phi1.varset
    total = Matrix.zeros(2, vs)
    for key, c in t.coeffs.items():
        total = total + _basis_image(F, *key) * c
    return total


def _member_check(A, *ms):
    for M in ms:
        if not a_member(M, A):
            raise MembershipError(f"{M} is not a member of A")


def eval_tensor(p: Point, g: Ordering, a1: Matrix, a2: Matrix, A: BlowupRing) -> TensorElement:
    """g e_p(a1) (x) e_p(a2) g^-1."""
    _member_check(A, a1, a2)
    return TensorElement.from_pair(g.g @ a1.evaluate(p), a2.evaluate(p) @ g.g_inv)


def _scalar_form(M: Matrix):
    if M[0, 1] or M[1, 0] or M[0, 0] != M[1, 1]:
        return None
    return M[0, 0]


def identity_value(p: Point, g: Ordering, F: MatrixFactorization, A: BlowupRing) -> Poly:
    """b with phi e_p c_g(1 (x) 1) = b 1_2."""
    from .poly import SPACETIME

    one = Matrix.identity(2, SPACETIME)
    M = state_morphism(eval_tensor(p, g, one, one, A), F)
    b = _scalar_form(M)
    if b is None:
        raise ValueError(f"image of 1 (x) 1 is not proportional to 1_2: {M}")
    return b


@dataclass(frozen=True)
class SubspaceReport:
    basis: tuple  # each entry: (coefficient of ua*db, coefficient of da*ub), or None if unknown
    dimension: int
    case: str  # up-down, down-up, both, other
    point: Point
    ordering: Ordering
    shape: str
    w_dimension: int

    def describe(self) -> str:
        if self.case == "up-down":
            return "ua*db*C"
        if self.case == "down-up":
            return "da*ub*C"
        if self.case == "both":
            return "ua*db*C + da*ub*C"
        return f"other (dim {self.dimension})"


def expected_case(p: Point, g: Ordering, A: BlowupRing) -> str:
    if not in_zero_locus(p, A.ideal):
        return "both"
    return "up-down" if g.tag == "RI" else "down-up"


def _coordinates(mats, diag_monomials):
    """Vectorize 2x2 matrices of polys on (entry, monomial) coordinates."""
    monos = set(diag_monomials)
    for M in mats:
        for _, e in M.entries():
            monos.update(e.terms)
    monos = sorted(monos)
    index = {(r, c, m): n for n, (r, c, m) in enumerate((r, c, m) for r in range(2) for c in range(2) for m in monos)}
    vecs = []
    for M in mats:
        v = [ZERO] * len(index)
        for (r, c), e in M.entries():
            for m, coef in e.terms.items():
                v[index[(r, c, m)]] = coef
        vecs.append(v)
    return vecs, monos, index


def collapse_subspace(p: Point, g: Ordering, A: BlowupRing, F: MatrixFactorization) -> SubspaceReport:
    basis_out, dim, case, rank_w = _collapse_core(tuple(image_basis(p, A)), g, F)
    return SubspaceReport(basis_out, dim, case, p, g, image_shape(p, A, g), rank_w)


@lru_cache(maxsize=64)
def _collapse_core(basis, g: Ordering, F: MatrixFactorization):
    # W depends on p only through the evaluated image basis
    lefts = [g.g @ X for X in basis]
    rights = [Y @ g.g_inv for Y in basis]
    W = [state_morphism(TensorElement.from_pair(L, R), F) for L in lefts for R in rights]
    W = [M for M in W if not M.is_zero()]
    diag_monos = set()
    for M in W:
        diag_monos.update(M[0, 0].terms)
        diag_monos.update(M[1, 1].terms)
    vs = F.phi1.varset
    D = [Matrix.identity(2, vs) * Poly(vs, {m: 1}) for m in sorted(diag_monos)]
    vecs, monos, index = _coordinates(W + D, ())
    w_vecs, d_vecs = vecs[: len(W)], vecs[len(W):]
    rank_w = rank(w_vecs)
    dim = rank_w + rank(d_vecs) - rank(w_vecs + d_vecs)

    basis_out = None
    if all(c.is_xi_free() for v in w_vecs for c in v):
        basis_out = []
        for v in intersect_spans(w_vecs, d_vecs, len(index)):
            b = {m: v[index[(0, 0, m)]] for m in monos if v[index[(0, 0, m)]]}
            if set(b) - {UP_DOWN, DOWN_UP}:
                basis_out = None
                break
            basis_out.append((b.get(UP_DOWN, ZERO), b.get(DOWN_UP, ZERO)))
    else:
        # xi-bearing data: test the two candidate directions by rank
        found = []
        for m, pair in ((UP_DOWN, (ONE, ZERO)), (DOWN_UP, (ZERO, ONE))):
            if m in monos:
                target = _coordinates([Matrix.identity(2, vs) * Poly(vs, {m: 1})], monos)[0][0]
                if in_span(target, w_vecs):
                    found.append(pair)
        if len(found) == dim:
            basis_out = found

    case = "other"
    if basis_out is not None:
        basis_out.sort(key=lambda b: (b[0] == ZERO, b[1] != ZERO))
        spans = set(basis_out)
        if dim == 1 and spans == {(ONE, ZERO)}:
            case = "up-down"
        elif dim == 1 and spans == {(ZERO, ONE)}:
            case = "down-up"
        elif dim == 2 and spans == {(ONE, ZERO), (ZERO, ONE)}:
            case = "both"
    return (tuple(basis_out) if basis_out is not None else None), dim, case, rank_w


def left_square_check(p: Point, g: Ordering, samples, A: BlowupRing) -> bool:
    """e_p c_g(a1 a2) == mu(e_p c_g(a1 (x) a2)) for every sampled pair."""
    for a1, a2 in samples:
        _member_check(A, a1, a2)
        lhs = g.conjugate((a1 @ a2).evaluate(p))
        rhs = mu(eval_tensor(p, g, a1, a2, A))
        if lhs != rhs:
            return False
    return True


def right_square_witness(F: MatrixFactorization):
    """Two tensors with equal products whose state-morphism images differ."""
    one = Matrix.identity(2)
    swap = Matrix([[0, 1], [1, 0]])
    t1 = TensorElement.from_pair(one, one)
    t2 = TensorElement.from_pair(swap, swap)
    m1, m2 = state_morphism(t1, F), state_morphism(t2, F)
    if mu(t1) != mu(t2) or m1 == m2:
        raise AssertionError("right-square witness failed")
    return t1, t2, m1, m2


def spin_poly(text: str) -> Poly:
    from .textio import parse_poly

    return parse_poly(text, SPIN)
