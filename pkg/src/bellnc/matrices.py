"""Square matrices whose entries are Scalars or Polys."""

from __future__ import annotations

from numbers import Rational

from .errors import NotInvertibleError, VarSetMismatch
from .poly import Poly, VarSet
from .scalars import ONE, ZERO, Scalar


def _zero(ring):
    return ring.zero() if isinstance(ring, VarSet) else ZERO


def _one(ring):
    return ring.one() if isinstance(ring, VarSet) else ONE


def _entry(x):
    if isinstance(x, (Poly, Scalar)):
        return x
    if isinstance(x, (int, Rational)):
        return Scalar.of(x)
    raise TypeError(f"unsupported matrix entry {x!r}")


class Matrix:
    """Immutable rectangular matrix (almost always square here)."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(_entry(x) for x in row) for row in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must be nonempty and of equal length")
        varsets = {e.varset for r in rows for e in r if isinstance(e, Poly)}
        if len(varsets) > 1:
            raise VarSetMismatch("matrix entries use different VarSets")
        if varsets:
            (vs,) = varsets
            rows = tuple(tuple(e if isinstance(e, Poly) else vs.const(e) for e in r) for r in rows)
        self.rows = rows
        self._hash = None

    # constructors -------------------------------------------------------

    @classmethod
    def identity(cls, n: int, ring=None) -> "Matrix":
        return cls([[_one(ring) if i == j else _zero(ring) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, ring=None) -> "Matrix":
        return cls([[_zero(ring)] * n for _ in range(n)])

    @classmethod
    def unit(cls, i: int, j: int, n: int = 2, ring=None) -> "Matrix":
        """Matrix unit with a 1 in slot (i, j); indices are 1-based."""
        return cls(
            [[_one(ring) if (r, c) == (i - 1, j - 1) else _zero(ring) for c in range(n)] for r in range(n)]
        )

    @classmethod
    def diag(cls, *entries) -> "Matrix":
        entries = [_entry(e) for e in entries]
        zero = entries[0] - entries[0]
        n = len(entries)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    # inspection ---------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    @property
    def varset(self):
        e = self.rows[0][0]
        return e.varset if isinstance(e, Poly) else None

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for i, row in enumerate(self.rows):
            for j, e in enumerate(row):
                yield (i, j), e

    def is_zero(self) -> bool:
        return not any(e for row in self.rows for e in row)

    # arithmetic ---------------------------------------------------------

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(e) for e in row] for row in self.rows])

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.map(lambda e: -e)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = self.rows[i][0] * other.rows[0][j]
                for t in range(1, k):
                    acc = acc + self.rows[i][t] * other.rows[t][j]
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        return self.map(lambda e: e * other)

    def __rmul__(self, other):
        return self.map(lambda e: other * e)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def dagger(self) -> "Matrix":
        """Conjugate transpose."""
        return Matrix([[e.conj() for e in col] for col in zip(*self.rows)])

    def trace(self):
        acc = self.rows[0][0]
        for i in range(1, self.size):
            acc = acc + self.rows[i][i]
        return acc

    def det(self):
        n = self.size
        if n == 1:
            return self.rows[0][0]
        if n == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        acc = None
        for j in range(n):
            minor = Matrix([row[:j] + row[j + 1:] for row in self.rows[1:]])
            term = self.rows[0][j] * minor.det()
            if j % 2:
                term = -term
            acc = term if acc is None else acc + term
        return acc

    def adjugate(self) -> "Matrix":
        n = self.size
        if n == 1:
            return Matrix([[_one(self.varset)]])
        cof = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = Matrix([r[:j] + r[j + 1:] for k, r in enumerate(self.rows) if k != i])
                d = minor.det()
                row.append(-d if (i + j) % 2 else d)
            cof.append(row)
        return Matrix(cof).transpose()

    def inverse(self) -> "Matrix":
        """Inverse via the adjugate; the determinant must be a unit scalar."""
        d = self.det()
        if isinstance(d, Poly):
            if not d.is_constant():
                raise NotInvertibleError("determinant is not constant")
            d = d.constant_term()
        if not d:
            raise NotInvertibleError("matrix is singular")
        if not d.is_unit():
            raise NotInvertibleError(f"determinant {d} is not a unit")
        return self.adjugate() * d.inverse()

    def specialize_theta(self, theta_case: str) -> "Matrix":
        return self.map(lambda e: e.specialize_theta(theta_case))

    def evaluate(self, p) -> "Matrix":
        from .poly import eval_at

        return self.map(lambda e: eval_at(e, p))

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return f"Matrix({str(self)})"

    def __str__(self):
        from .textio import format_matrix

        return format_matrix(self)


def eps(i: int, j: int, n: int = 2, ring=None) -> Matrix:
    return Matrix.unit(i, j, n, ring)


SWAP = Matrix([[0, 1], [1, 0]])
ID2 = Matrix.identity(2)
