"""Multivariate polynomials over :class:`~bellnc.scalars.Scalar`.

Two ambient rings are used throughout: spacetime ``C[x, y, z, t]`` and the
spin ring ``C[ua, da, ub, db]`` (up/down spin of particles a and b).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import VarSetMismatch
from .scalars import ONE, ZERO, Scalar

DESIGNATIONS = ("spacetime", "spin", "extended")


@dataclass(frozen=True)
class VarSet:
    """Ordered variable names; the order fixes every monomial order."""

    names: tuple
    designation: str = "extended"

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if self.designation not in DESIGNATIONS:
            raise ValueError(f"unknown designation {self.designation!r}")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def var(self, name: str) -> "Poly":
        e = [0] * len(self.names)
        e[self.index(name)] = 1
        return Poly(self, {tuple(e): ONE})

    def gens(self):
        return tuple(self.var(n) for n in self.names)

    def extend(self, *names: str) -> "VarSet":
        """Prepend fresh variables (they come first in the variable order)."""
        return VarSet(tuple(names) + self.names, "extended")

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(ONE)

    def const(self, c) -> "Poly":
        return Poly(self, {(0,) * len(self.names): Scalar.of(c)})


SPACETIME = VarSet(("x", "y", "z", "t"), "spacetime")
SPIN = VarSet(("ua", "da", "ub", "db"), "spin")


# monomial orders: each maps an exponent tuple to a sort key, larger = bigger


def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def deglex_key(e):
    return (sum(e), tuple(e))


def elimination_key(k: int):
    """Block order: grevlex on the first ``k`` variables, ties by grevlex on the rest."""

    def key(e):
        return (grevlex_key(e[:k]), grevlex_key(e[k:]))

    return key


def order_key(order):
    if order == "grevlex":
        return grevlex_key
    if order == "deglex":
        return deglex_key
    if isinstance(order, tuple) and order[0] == "elim":
        return elimination_key(order[1])
    raise ValueError(f"unknown monomial order {order!r}")


def _coerce_scalar(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Rational)):
        return Scalar.of(value)
    return None


class Poly:
    """Immutable polynomial; no zero coefficients are stored."""

    __slots__ = ("varset", "_terms", "_hash")

    def __init__(self, varset: VarSet, terms=None):
        self.varset = varset
        n = len(varset)
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                e = tuple(int(x) for x in e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not match {varset.names}")
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent {e}")
                c = Scalar.of(c)
                if c:
                    clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, varset, terms):
        obj = cls.__new__(cls)
        obj.varset = varset
        obj._terms = terms
        obj._hash = None
        return obj

    # inspection ---------------------------------------------------------

    @property
    def terms(self):
        """Mapping exponent tuple -> nonzero Scalar (do not mutate)."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self) -> Scalar:
        return self._terms.get((0,) * len(self.varset), ZERO)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_xi_free(self) -> bool:
        return all(c.is_xi_free() for c in self._terms.values())

    def sorted_terms(self, order="deglex"):
        key = order_key(order)
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order="grevlex"):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = order_key(order)
        e = max(self._terms, key=key)
        return e, self._terms[e]

    def variables(self):
        used = set()
        for e in self._terms:
            used.update(i for i, x in enumerate(e) if x)
        return tuple(self.varset.names[i] for i in sorted(used))

    # arithmetic ---------------------------------------------------------

    def _check(self, other):
        if other.varset != self.varset:
            raise VarSetMismatch(f"{self.varset.names} vs {other.varset.names}")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        c = _coerce_scalar(other)
        if c is None:
            return None
        return self.varset.const(c)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            if e in acc:
                s = acc[e] + c
                if s:
                    acc[e] = s
                else:
                    del acc[e]
            else:
                acc[e] = c
        return Poly._raw(self.varset, acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.varset, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c) -> "Poly":
        c = Scalar.of(c)
        if not c:
            return Poly._raw(self.varset, {})
        return Poly._raw(self.varset, {e: c * v for e, v in self._terms.items()})

    def mul_term(self, e, c) -> "Poly":
        """Multiply by the single term ``c * x^e``."""
        return Poly._raw(
            self.varset,
            {tuple(a + b for a, b in zip(m, e)): c * v for m, v in self._terms.items()},
        )

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _coerce_scalar(other)
            if c is None:
                return NotImplemented
            return self.scale(c)
        self._check(other)
        acc = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                acc[e] = acc[e] + p if e in acc else p
        return Poly._raw(self.varset, {e: c for e, c in acc.items() if c})

    def __rmul__(self, other):
        c = _coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.varset.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def map_coefficients(self, fn) -> "Poly":
        return Poly(self.varset, {e: fn(c) for e, c in self._terms.items()})

    def conj(self) -> "Poly":
        """Conjugate the coefficients; variables are treated as real."""
        return self.map_coefficients(lambda c: c.conj())

    def specialize_theta(self, theta_case: str) -> "Poly":
        return self.map_coefficients(lambda c: c.specialize_theta(theta_case))

    def embed(self, target: VarSet) -> "Poly":
        """Re-express in a VarSet containing all of this polynomial's variables."""
        idx = [target.index(n) for n in self.varset.names]
        n = len(target)
        out = {}
        for e, c in self._terms.items():
            new = [0] * n
            for i, x in zip(idx, e):
                new[i] = x
            out[tuple(new)] = c
        return Poly._raw(target, out)

    def restrict(self, target: VarSet) -> "Poly":
        """Inverse of :meth:`embed`; fails if an absent variable is used."""
        idx = {n: i for i, n in enumerate(self.varset.names)}
        keep = [idx[n] for n in target.names]
        out = {}
        for e, c in self._terms.items():
            if sum(e) != sum(e[i] for i in keep):
                raise VarSetMismatch(f"polynomial uses variables outside {target.names}")
            out[tuple(e[i] for i in keep)] = c
        return Poly._raw(target, out)

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.varset == other.varset and self._terms == other._terms
        c = _coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self == self.varset.const(c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        from .textio import print_poly

        return print_poly(self)


@dataclass(frozen=True)
class Point:
    """A point of affine space over the xi-free scalars."""

    varset: VarSet
    coords: tuple

    def __post_init__(self):
        coords = tuple(Scalar.of(c) for c in self.coords)
        if len(coords) != len(self.varset):
            raise ValueError(f"point has {len(coords)} coordinates, expected {len(self.varset)}")
        if not all(c.is_xi_free() for c in coords):
            raise ValueError("point coordinates must be xi-free")
        object.__setattr__(self, "coords", coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def point(varset: VarSet, *coords) -> Point:
    return Point(varset, tuple(coords))


def eval_at(f: Poly, p: Point) -> Scalar:
    if f.varset != p.varset:
        raise VarSetMismatch(f"{f.varset.names} vs {p.varset.names}")
    if all(x.is_rational() for x in p.coords):
        qs = [x.to_fraction() for x in p.coords]
        total = ZERO
        for e, c in f.terms.items():
            v = Fraction(1)
            for q, k in zip(qs, e):
                if k:
                    v *= q**k
            if v:
                total = total + c.scale_rational(v)
        return total
    total = ZERO
    for e, c in f.terms.items():
        term = c
        for x, k in zip(p.coords, e):
            if k:
                term = term * x ** k
        total = total + term
    return total
