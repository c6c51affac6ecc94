"""Exact coefficients: Q(i, s) with s^2 = 2, plus a formal unimodular phase xi.

A :class:`Scalar` is a Laurent polynomial in ``xi`` whose coefficients are
4-tuples ``(a, b, c, d)`` of rationals standing for ``a + b*i + c*s + d*i*s``
where ``s`` plays the role of sqrt(2).  Conjugation fixes the rationals and
``s`` and sends ``i -> -i``, ``xi -> xi^-1``; with ``xi`` read as a point of
the unit circle this is complex conjugation.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import NotInvertibleError

_ZERO4 = (Fraction(0),) * 4

THETA_CASES = ("zero", "pi")


def _mul4(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    if not (a1 or a2 or a3):
        return (a0 * b0, a0 * b1, a0 * b2, a0 * b3)
    if not (b1 or b2 or b3):
        return (a0 * b0, a1 * b0, a2 * b0, a3 * b0)
    # basis 1, i, s, is with i^2 = -1, s^2 = 2
    return (
        a0 * b0 - a1 * b1 + 2 * a2 * b2 - 2 * a3 * b3,
        a0 * b1 + a1 * b0 + 2 * a2 * b3 + 2 * a3 * b2,
        a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
    )


def _add4(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def _inv4(a):
    """Inverse of a nonzero element of Q(i, s)."""
    a0, a1, a2, a3 = a
    # a = u + v*s with u = a0 + a1 i, v = a2 + a3 i; (u + v s)(u - v s) = u^2 - 2 v^2
    conj_s = (a0, a1, -a2, -a3)
    n = _mul4(a, conj_s)
    n0, n1 = n[0], n[1]
    mod = n0 * n0 + n1 * n1
    if mod == 0:
        raise ZeroDivisionError("division by zero scalar")
    n_inv = (n0 / mod, -n1 / mod, Fraction(0), Fraction(0))
    return _mul4(conj_s, n_inv)


def _sign_u_plus_v_sqrt2(u: Fraction, v: Fraction) -> int:
    """Exact sign of u + v*sqrt(2) for rational u, v."""
    if v == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return (v > 0) - (v < 0)
    if (u > 0) == (v > 0):
        return 1 if u > 0 else -1
    # opposite signs: compare u^2 with 2 v^2
    if u * u > 2 * v * v:
        return 1 if u > 0 else -1
    return 1 if v > 0 else -1


class Scalar:
    """Immutable element of Q(i, s)[xi, xi^-1] in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        canon = {}
        if terms:
            for k, coeffs in dict(terms).items():
                c = tuple(Fraction(x) for x in coeffs)
                if len(c) != 4:
                    raise ValueError("coefficient tuple must have length 4")
                if any(c):
                    canon[int(k)] = c
        self._terms = tuple(sorted(canon.items()))
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def _raw(cls, items):
        obj = cls.__new__(cls)
        obj._terms = tuple(sorted((k, c) for k, c in items if any(c)))
        obj._hash = None
        return obj

    @classmethod
    def of(cls, value) -> "Scalar":
        """Coerce an int, Fraction or Scalar."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Rational)):
            q = Fraction(value)
            return cls._raw([(0, (q, Fraction(0), Fraction(0), Fraction(0)))])
        raise TypeError(f"cannot make a Scalar from {type(value).__name__}")

    @classmethod
    def rational(cls, num, den=1) -> "Scalar":
        return cls.of(Fraction(num, den))

    @classmethod
    def from_components(cls, a=0, b=0, c=0, d=0, xi_power=0) -> "Scalar":
        """``(a + b i + c s + d i s) * xi^xi_power``."""
        return cls({xi_power: (a, b, c, d)})

    # inspection ---------------------------------------------------------

    @property
    def terms(self):
        """Sorted ``(xi_exponent, (a, b, c, d))`` pairs."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def xi_exponents(self):
        return tuple(k for k, _ in self._terms)

    def is_xi_free(self) -> bool:
        return all(k == 0 for k, _ in self._terms)

    def is_rational(self) -> bool:
        if self.is_zero():
            return True
        return self.is_xi_free() and not any(self._terms[0][1][1:])

    def is_unit(self) -> bool:
        """Units of the Laurent ring are the nonzero xi-monomials."""
        return len(self._terms) == 1

    def components(self, xi_power=0):
        for k, c in self._terms:
            if k == xi_power:
                return c
        return _ZERO4

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.components()[0]

    def is_nonnegative_real(self) -> bool:
        """True iff xi-free, with no i-part, and >= 0 under s -> sqrt(2)."""
        if not self.is_xi_free():
            return False
        a, b, c, d = self.components()
        if b or d:
            return False
        return _sign_u_plus_v_sqrt2(a, c) >= 0

    def to_complex(self, theta: float = 0.0) -> complex:
        """Floating-point value at xi = exp(i (theta + pi) / 2); diagnostics only."""
        import cmath
        import math

        xi = cmath.exp(1j * (theta + math.pi) / 2)
        total = 0j
        for k, (a, b, c, d) in self._terms:
            base = complex(float(a) + float(c) * math.sqrt(2), float(b) + float(d) * math.sqrt(2))
            total += base * xi ** k
        return total

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms:
            acc[k] = _add4(acc[k], c) if k in acc else c
        return Scalar._raw(acc.items())

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw((k, (-a, -b, -c, -d)) for k, (a, b, c, d) in self._terms)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.of(other) - self

    def __mul__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        acc = {}
        for k1, c1 in self._terms:
            for k2, c2 in other._terms:
                k = k1 + k2
                p = _mul4(c1, c2)
                acc[k] = _add4(acc[k], p) if k in acc else p
        return Scalar._raw(acc.items())

    __rmul__ = __mul__

    def scale_rational(self, q: Fraction) -> "Scalar":
        """Multiply by a rational number."""
        if not q:
            return ZERO
        return Scalar._raw((k, (a * q, b * q, c * q, d * q)) for k, (a, b, c, d) in self._terms)

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if not self.is_unit():
            raise NotInvertibleError(f"{self} is not a unit of the Laurent ring in xi")
        (k, c), = self._terms
        return Scalar._raw([(-k, _inv4(c))])

    def __truediv__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.of(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "Scalar":
        return Scalar._raw((-k, (a, -b, c, -d)) for k, (a, b, c, d) in self._terms)

    def specialize_theta(self, theta_case: str) -> "Scalar":
        """Substitute xi = i (theta = 0) or xi = -1 (theta = pi)."""
        if theta_case == "zero":
            xi_value = I
        elif theta_case == "pi":
            xi_value = -ONE
        else:
            raise ValueError(f"theta case must be one of {THETA_CASES}, got {theta_case!r}")
        total = ZERO
        for k, c in self._terms:
            total = total + Scalar._raw([(0, c)]) * xi_value ** k
        return total

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == Scalar.of(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        from .textio import format_scalar

        return format_scalar(self)


ZERO = Scalar()
ONE = Scalar.of(1)
I = Scalar.from_components(b=1)
S2 = Scalar.from_components(c=1)
XI = Scalar.from_components(a=1, xi_power=1)
INV_SQRT2 = Scalar.from_components(c=Fraction(1, 2))


def e_i_theta() -> Scalar:
    """The phase e^{i theta} written in terms of xi: -xi^2."""
    return -(XI * XI)


def specialize_theta(a: Scalar, theta_case: str) -> Scalar:
    return Scalar.of(a).specialize_theta(theta_case)


def conj(a) -> Scalar:
    return Scalar.of(a).conj()
