"""Buchberger's algorithm and the ideal operations built on it.

Everything defaults to graded reverse lexicographic order.  Intersections use
a block elimination order on one auxiliary variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import VarSetMismatch, XiCoefficientError
from .poly import Poly, VarSet, order_key
from .scalars import ZERO


@dataclass(frozen=True)
class Ideal:
    varset: VarSet
    generators: tuple = ()

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if g.varset != self.varset:
                raise VarSetMismatch(f"generator {g} not over {self.varset.names}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, varset, *gens):
        return cls(varset, tuple(gens))

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class GroebnerBasis:
    ideal: Ideal
    order: object
    basis: tuple

    @property
    def varset(self):
        return self.ideal.varset

    def leading_monomials(self):
        return [g.leading_term(self.order)[0] for g in self.basis]

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() for g in self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(f: Poly, order) -> Poly:
    _, c = f.leading_term(order)
    return f.scale(c.inverse())


def _reduce(f: Poly, basis, key) -> Poly:
    """Full reduction of ``f`` by monic polys ``basis`` (list of (lead exp, poly))."""
    p = dict(f.terms)
    rem = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        for le, g in basis:
            if _divides(le, e):
                q = tuple(a - b for a, b in zip(e, le))
                for ge, gc in g.terms.items():
                    m = tuple(a + b for a, b in zip(ge, q))
                    v = p.get(m, ZERO) - c * gc
                    if v:
                        p[m] = v
                    else:
                        p.pop(m, None)
                break
        else:
            rem[e] = c
            del p[e]
    return Poly._raw(f.varset, rem)


def _s_poly(f: Poly, g: Poly, order) -> Poly:
    ef, cf = f.leading_term(order)
    eg, cg = g.leading_term(order)
    m = _lcm(ef, eg)
    uf = tuple(a - b for a, b in zip(m, ef))
    ug = tuple(a - b for a, b in zip(m, eg))
    return f.mul_term(uf, cf.inverse()) - g.mul_term(ug, cg.inverse())


def buchberger(I: Ideal, order="grevlex") -> GroebnerBasis:
    """Reduced Groebner basis of ``I``."""
    return _buchberger_cached(I, order)


@lru_cache(maxsize=512)
def _buchberger_cached(I: Ideal, order) -> GroebnerBasis:
    for g in I.generators:
        if not g.is_xi_free():
            raise XiCoefficientError(f"generator {g} has xi-bearing coefficients")
    key = order_key(order)
    G = [_monic(g, order) for g in I.generators]
    leads = [g.leading_term(order)[0] for g in G]
    pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    while pairs:
        # normal selection: smallest lcm degree first, ties by position
        pairs.sort(key=lambda ij: (sum(_lcm(leads[ij[0]], leads[ij[1]])), ij))
        i, j = pairs.pop(0)
        if all(a == 0 or b == 0 for a, b in zip(leads[i], leads[j])):
            continue  # coprime leading monomials
        h = _reduce(_s_poly(G[i], G[j], order), list(zip(leads, G)), key)
        if h.is_zero():
            continue
        h = _monic(h, order)
        G.append(h)
        leads.append(h.leading_term(order)[0])
        k = len(G) - 1
        pairs.extend((m, k) for m in range(k))
    return GroebnerBasis(I, order, _reduce_basis(G, order))


def _reduce_basis(G, order):
    key = order_key(order)
    items = sorted(((g.leading_term(order)[0], g) for g in G), key=lambda t: key(t[0]))
    minimal = []
    for le, g in items:
        # ascending order: any divisor of le was already seen
        if any(_divides(o, le) for o, _ in minimal):
            continue
        minimal.append((le, g))
    reduced = []
    for n, (le, g) in enumerate(minimal):
        rest = [t for m, t in enumerate(minimal) if m != n]
        tail = g - g.varset.const(1).mul_term(le, g.terms[le])
        r = _reduce(tail, rest, key)
        reduced.append(r + g.varset.const(1).mul_term(le, g.terms[le]))
    reduced.sort(key=lambda g: key(g.leading_term(order)[0]), reverse=True)
    return tuple(reduced)


def normal_form(f: Poly, G: GroebnerBasis) -> Poly:
    if f.varset != G.varset:
        raise VarSetMismatch(f"{f.varset.names} vs {G.varset.names}")
    key = order_key(G.order)
    return _reduce(f, [(g.leading_term(G.order)[0], g) for g in G.basis], key)


def member(f: Poly, I: Ideal) -> bool:
    if f.is_zero():
        return True
    return normal_form(f, buchberger(I)).is_zero()


def contains(I: Ideal, J: Ideal) -> bool:
    """J subset of I, by generator membership."""
    return all(member(g, I) for g in J.generators)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    return contains(I, J) and contains(J, I)


def _fresh_name(varset: VarSet, base="w"):
    name, n = base, 0
    while name in varset.names:
        n += 1
        name = f"{base}{n}"
    return name


def radical_member(f: Poly, I: Ideal) -> bool:
    """f in sqrt(I) iff 1 in I + (1 - w f) with w a fresh variable."""
    if f.varset != I.varset:
        raise VarSetMismatch(f"{f.varset.names} vs {I.varset.names}")
    ext = I.varset.extend(_fresh_name(I.varset))
    w = ext.gens()[0]
    gens = tuple(g.embed(ext) for g in I.generators) + (1 - w * f.embed(ext),)
    return buchberger(Ideal(ext, gens)).is_unit_ideal()


def product(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.varset, tuple(a * b for a in I.generators for b in J.generators))


def sum_ideal(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.varset, I.generators + J.generators)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J via elimination of w from w I + (1 - w) J."""
    if I.varset != J.varset:
        raise VarSetMismatch(f"{I.varset.names} vs {J.varset.names}")
    vs = I.varset
    if I.is_zero_ideal() or J.is_zero_ideal():
        return Ideal(vs, ())
    ext = vs.extend(_fresh_name(vs))
    w = ext.gens()[0]
    gens = tuple(w * g.embed(ext) for g in I.generators) + tuple(
        (1 - w) * g.embed(ext) for g in J.generators
    )
    gb = buchberger(Ideal(ext, gens), ("elim", 1))
    kept = tuple(g.restrict(vs) for g in gb.basis if g.leading_term(gb.order)[0][0] == 0)
    result = Ideal(vs, buchberger(Ideal(vs, kept)).basis)
    if not (contains(I, result) and contains(J, result) and contains(result, product(I, J))):
        raise AssertionError("intersection failed its containment checks")
    return result


def krull_dim_zero_locus(I: Ideal) -> int:
    """Dimension of Z(I): largest variable set free of every leading monomial."""
    G = buchberger(I)
    n = len(I.varset)
    if G.is_unit_ideal():
        return -1
    supports = [frozenset(i for i, x in enumerate(le) if x) for le in G.leading_monomials()]
    for size in range(n, -1, -1):
        for U in combinations(range(n), size):
            U = frozenset(U)
            if not any(s <= U for s in supports):
                return size
    return 0


def s_polynomials_reduce_to_zero(G: GroebnerBasis) -> bool:
    key = order_key(G.order)
    basis = [(g.leading_term(G.order)[0], g) for g in G.basis]
    for (_, f), (_, g) in combinations(basis, 2):
        if not _reduce(_s_poly(f, g, G.order), basis, key).is_zero():
            return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    for g in G.basis:
        le, c = g.leading_term(G.order)
        if c != 1:
            return False
        for h in G.basis:
            if h is g:
                continue
            if any(_divides(h.leading_term(G.order)[0], e) for e in g.terms):
                return False
    return True
