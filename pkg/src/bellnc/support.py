"""Support ideals in spacetime and the supporting ring R = C + I.

R is never given by generators: membership is "normal form modulo I is a
constant", which is exact even when R is nonnoetherian.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MembershipError, ScenarioError
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    contains,
    intersect,
    krull_dim_zero_locus,
    normal_form,
    product,
    radical_member,
)
from .poly import SPACETIME, Point, Poly, eval_at


@dataclass(frozen=True)
class SupportScenario:
    kind: str  # "real" or "instrumental"
    v: Fraction = None
    pa: Point = None
    pb: Point = None

    def __post_init__(self):
        if self.kind == "real":
            if self.v is None or Fraction(self.v) == 0:
                raise ScenarioError("real support needs a nonzero speed v")
            object.__setattr__(self, "v", Fraction(self.v))
        elif self.kind == "instrumental":
            if self.pa is None or self.pb is None:
                raise ScenarioError("instrumental support needs two points")
            if self.pa == self.pb:
                raise ScenarioError("instrumental support points must be distinct")
        else:
            raise ScenarioError(f"unknown support kind {self.kind!r}")

    @classmethod
    def real(cls, v=1):
        return cls("real", v=Fraction(v))

    @classmethod
    def instrumental(cls, pa, pb):
        if not isinstance(pa, Point):
            pa = Point(SPACETIME, tuple(pa))
        if not isinstance(pb, Point):
            pb = Point(SPACETIME, tuple(pb))
        return cls("instrumental", pa=pa, pb=pb)


def point_ideal(p: Point) -> Ideal:
    """The maximal ideal of functions vanishing at ``p``."""
    return Ideal(p.varset, tuple(g - c for g, c in zip(p.varset.gens(), p.coords)))


def line_ideals(v):
    x, y, z, t = SPACETIME.gens()
    return Ideal.of(SPACETIME, x, y, z - v * t), Ideal.of(SPACETIME, x, y, z + v * t)


def support_ideal(sc: SupportScenario) -> Ideal:
    if sc.kind == "real":
        x, y, z, t = SPACETIME.gens()
        ideal = Ideal.of(SPACETIME, x, y, (z - sc.v * t) * (z + sc.v * t))
        parts = line_ideals(sc.v)
    else:
        parts = (point_ideal(sc.pa), point_ideal(sc.pb))
        ideal = intersect(*parts)
    prod = product(*parts)
    # ideal = sqrt(prod): prod lies in it, and it lies in the radical of prod
    if not contains(ideal, prod) or not all(radical_member(g, prod) for g in ideal.generators):
        raise AssertionError("support ideal is not the radical of the product")
    return ideal


def in_zero_locus(p: Point, I: Ideal) -> bool:
    return all(not eval_at(g, p) for g in I.generators)


@dataclass(frozen=True)
class SupportingRing:
    """R = C + I inside S; ``I`` must be proper."""

    ideal: Ideal

    def __post_init__(self):
        if self.gb.is_unit_ideal():
            raise ScenarioError("the supporting ring needs a proper ideal")

    @property
    def gb(self) -> GroebnerBasis:
        return buchberger(self.ideal)

    @classmethod
    def from_scenario(cls, sc: SupportScenario) -> "SupportingRing":
        return cls(support_ideal(sc))


def r_member(f: Poly, R: SupportingRing) -> bool:
    return normal_form(f, R.gb).is_constant()


def i_member(f: Poly, R: SupportingRing) -> bool:
    return normal_form(f, R.gb).is_zero()


def is_nonnoetherian(R: SupportingRing) -> bool:
    return krull_dim_zero_locus(R.ideal) >= 1


def i_maximal_in_r_check(R: SupportingRing, samples) -> bool:
    """Every sample of R splits as constant + element of I, so R/I is spanned by 1."""
    for f in samples:
        if not r_member(f, R):
            raise MembershipError(f"sample {f} is not in R")
    for f in samples:
        c = normal_form(f, R.gb).constant_term()
        if not i_member(f - c, R):
            return False
    return True
