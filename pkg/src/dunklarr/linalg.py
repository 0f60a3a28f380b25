"""Row reduction over exact fields and over complex floats.

Exact routines work with any element type supporting field arithmetic and
``bool()`` as a zero test (``Fraction``, ``GaussianRational``).  Float routines
use a pivot threshold relative to the largest entry of the working matrix.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

EPS_RANK = 1e-9


def rref_exact(matrix):
    """Reduced row echelon form of a list-of-rows matrix; returns (rows, pivot_columns)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref_float(matrix, eps=EPS_RANK):
    """Row reduction with partial pivoting; entries below ``eps * max|entry|`` count as zero."""
    a = np.array(matrix, dtype=complex)
    if a.size == 0:
        return a, []
    thresh = eps * np.abs(a).max()
    m, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        col = np.abs(a[r:, c])
        k = int(np.argmax(col))
        if col[k] <= thresh:
            a[r:, c] = 0
            continue
        a[[r, r + k]] = a[[r + k, r]]
        a[r] /= a[r, c]
        for i in range(m):
            if i != r:
                a[i] -= a[i, c] * a[r]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a, pivots


def rank(vectors, exact: bool) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    if exact:
        return len(rref_exact(vectors)[1])
    return len(rref_float(vectors)[1])


def coordinates(basis, v, exact: bool):
    """Coefficients c with v = sum c_k basis[k]; ``basis`` must be independent and span v."""
    if exact:
        # columns: basis vectors, then v
        d = len(v)
        aug = [[b[i] for b in basis] + [v[i]] for i in range(d)]
        rows, pivots = rref_exact(aug)
        if len(basis) in pivots:
            raise ValueError("vector is not in the span of the basis")
        return [rows[k][len(basis)] for k in range(len(basis))]
    b = np.array(basis, dtype=complex).T
    c, *_ = np.linalg.lstsq(b, np.asarray(v, dtype=complex), rcond=None)
    return list(c)


def nonzero_coefficients(basis, v, exact: bool):
    """Indices k whose coefficient in the expansion of v is nonzero."""
    c = coordinates(basis, v, exact)
    if exact:
        return [k for k, x in enumerate(c) if x]
    vnorm = np.linalg.norm(np.asarray(v, dtype=complex))
    return [
        k for k, x in enumerate(c)
        if abs(x) * np.linalg.norm(np.asarray(basis[k], dtype=complex)) > EPS_RANK * vnorm
    ]


def nullspace_exact(matrix):
    """Basis of {x : matrix @ x = 0} over the rationals (one vector per free column)."""
    rows, pivots = rref_exact([[Fraction(x) for x in r] for r in matrix])
    ncols = len(matrix[0]) if matrix else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -rows[r][f]
        basis.append(x)
    return basis


def in_span_exact(rows, pivots, v) -> bool:
    """Membership test against an RREF basis (rows, pivots) from ``rref_exact``."""
    v = list(v)
    for row, p in zip(rows, pivots):
        if v[p]:
            f = v[p]
            v = [x - f * y for x, y in zip(v, row)]
    return not any(v)
