"""Dense two-phase simplex with Bland's rule.

Works over ``Fraction`` (tol = 0, exact) or float (tol > 0).  Problems are
given with free variables:

    maximize c.x  subject to  A_ub x <= b_ub,  A_eq x = b_eq.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import LPNumericalFailure

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple | None = None
    value: object = None


def _pivot(T, basis, r, c):
    inv = 1 / T[r][c]
    T[r] = [v * inv for v in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c]:
            f = T[i][c]
            T[i] = [v - f * w for v, w in zip(T[i], T[r])]
    basis[r] = c


def _optimize(T, basis, obj, columns, tol, max_pivots):
    """Maximize obj.y over the tableau; returns False when unbounded."""
    for _ in range(max_pivots):
        entering = None
        for j in columns:
            if j in basis:
                continue
            rc = obj[j] - sum(obj[b] * T[i][j] for i, b in enumerate(basis))
            if rc > tol:
                entering = j
                break
        if entering is None:
            return True
        best = None
        for i, row in enumerate(T):
            if row[entering] > tol:
                ratio = row[-1] / row[entering]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return False
        _pivot(T, basis, best[1], entering)
    raise LPNumericalFailure("simplex exceeded its pivot budget")


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), exact=True, tol=1e-12, max_pivots=100000) -> LPResult:
    conv = Fraction if exact else float
    tol = 0 if exact else tol
    nv = len(c)
    rows = [([conv(x) for x in a], conv(b), True) for a, b in zip(A_ub, b_ub)]
    rows += [([conv(x) for x in a], conv(b), False) for a, b in zip(A_eq, b_eq)]
    m = len(rows)
    n_slack = sum(1 for *_, ub in rows if ub)
    # columns: x+ (nv), x- (nv), slacks, artificials (m), rhs
    N = 2 * nv + n_slack + m
    zero, one = conv(0), conv(1)
    T, basis = [], []
    s = 0
    for i, (a, b, ub) in enumerate(rows):
        row = [zero] * (N + 1)
        row[:nv] = a
        row[nv:2 * nv] = [-x for x in a]
        if ub:
            row[2 * nv + s] = one
            s += 1
        row[-1] = b
        if b < 0:
            row = [-x for x in row]
        row[2 * nv + n_slack + i] = one
        T.append(row)
        basis.append(2 * nv + n_slack + i)

    art = range(2 * nv + n_slack, N)
    phase1 = [zero] * N
    for j in art:
        phase1[j] = -one
    _optimize(T, basis, phase1, range(N), tol, max_pivots)
    infeas = sum((T[i][-1] for i, b in enumerate(basis) if b in art), zero)
    if infeas > tol * max(1, m):
        return LPResult(INFEASIBLE)
    # drive zero-level artificials out of the basis; drop redundant rows
    for i in reversed(range(len(T))):
        if basis[i] in art:
            j = next((j for j in range(2 * nv + n_slack) if abs(T[i][j]) > tol), None)
            if j is None:
                del T[i]
                del basis[i]
            else:
                _pivot(T, basis, i, j)
    obj = [conv(x) for x in c] + [-conv(x) for x in c] + [zero] * (n_slack + m)
    if not _optimize(T, basis, obj, range(2 * nv + n_slack), tol, max_pivots):
        return LPResult(UNBOUNDED)
    y = [zero] * N
    for i, b in enumerate(basis):
        y[b] = T[i][-1]
    x = tuple(y[k] - y[nv + k] for k in range(nv))
    value = sum((conv(ci) * xi for ci, xi in zip(c, x)), zero)
    return LPResult(OPTIMAL, x, value)
