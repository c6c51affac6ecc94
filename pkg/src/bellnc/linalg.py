"""Exact linear algebra on vectors of Scalars.

``rank`` works over the fraction field of the Laurent ring in xi by
fraction-free elimination, so it accepts xi-bearing entries.  ``rref`` and
``nullspace`` need every pivot to be invertible, which always holds for
xi-free data.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, Scalar


def _clean(rows):
    return [[Scalar.of(x) for x in r] for r in rows]


def rank(rows) -> int:
    rows = [r for r in _clean(rows) if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        if p.is_unit():
            inv = p.inverse()
            rows[r] = [inv * a for a in rows[r]]
            p = ONE
        for i in range(r + 1, len(rows)):
            q = rows[i][col]
            if q:
                rows[i] = [p * a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def rref(rows):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [r for r in _clean(rows) if any(r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [inv * a for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                q = rows[i][col]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(rows, ncols: int):
    """Basis of {x : rows . x = 0}."""
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def in_span(v, basis) -> bool:
    basis = list(basis)
    return rank(basis + [v]) == rank(basis)


def span_basis(rows):
    """Canonical basis (rref rows) of the row span; xi-free input."""
    return rref(rows)[0]


def intersect_spans(u, v, ncols: int):
    """Canonical basis of span(u) cap span(v)."""
    u = span_basis(u)
    v = span_basis(v)
    if not u or not v:
        return []
    # solve sum a_k u_k = sum b_k v_k; columns are the generators
    system = [[uk[c] for uk in u] + [-vk[c] for vk in v] for c in range(ncols)]
    sols = nullspace(system, len(u) + len(v))
    vecs = []
    for s in sols:
        vec = [ZERO] * ncols
        for a, uk in zip(s[: len(u)], u):
            if a:
                vec = [x + a * y for x, y in zip(vec, uk)]
        vecs.append(vec)
    return span_basis(vecs)
