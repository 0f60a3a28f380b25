"""Search for Dunkl weights: the critical-point subspace of Q intersected with
the open cone of stable weights.

The critical-point system has rational coefficients determined by the poset
alone, so its null space is computed exactly.  Strict feasibility is decided
by maximizing a common slack sigma over the slice sum(a) = d.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import simplex
from .arrangement import Arrangement, IntersectionPoset, enumerate_flats, require_standard
from .errors import LPNumericalFailure, NotFeasible
from .hirzebruch import q_evaluate
from .linalg import nullspace_exact
from .stability import StabilityCone, stability_cone, stability_report

EPS_SLACK = 1e-9
SVD_THRESHOLD = 1e-10


@dataclass(frozen=True)
class CritQSystem:
    matrix: tuple  # rows of s_i(a) - (d-1)/d sum a_j
    nullspace_basis: tuple
    exact: bool = True

    @property
    def nullity(self) -> int:
        return len(self.nullspace_basis)

    @property
    def rank(self) -> int:
        return len(self.matrix) - self.nullity


def critq_matrix(poset: IntersectionPoset) -> list[list[Fraction]]:
    n, d = poset.n, poset.dim
    C = [[-Fraction(d - 1, d)] * n for _ in range(n)]
    for i, j in poset.rank2_reducible_pairs:
        C[i][j] += 1
        C[j][i] += 1
    for f in poset.g2():
        for i in f.members:
            for j in f.members:
                C[i][j] += Fraction(1, f.rank)
    return C


def critq_system(poset: IntersectionPoset, exact: bool = True) -> CritQSystem:
    require_standard(poset)
    C = critq_matrix(poset)
    if exact:
        basis = nullspace_exact(C)
        return CritQSystem(tuple(map(tuple, C)), tuple(map(tuple, basis)), True)
    m = np.array(C, dtype=float)
    _, sv, vt = np.linalg.svd(m)
    null = vt[np.sum(sv > SVD_THRESHOLD * max(sv[0], 1.0)):]
    return CritQSystem(
        tuple(tuple(map(float, r)) for r in C), tuple(tuple(map(float, v)) for v in null), False
    )


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    sample: tuple | None
    slack: object
    dimension: int
    active_constraints: tuple
    system: CritQSystem
    cone: StabilityCone


def _combine(basis, t):
    n = len(basis[0])
    return tuple(sum((b[i] * tk for b, tk in zip(basis, t)), 0 * t[0]) for i in range(n))


def find_dunkl_weights(
    arr: Arrangement, poset: IntersectionPoset | None = None, exact: bool = True
) -> FeasibilityResult:
    """Maximize sigma subject to g(a) >= sigma for every cone form g, a in the
    null space, sum(a) = d.  Feasible iff the optimal sigma is positive."""
    if poset is None:
        poset = enumerate_flats(arr)
    system = critq_system(poset, exact)
    cone = stability_cone(poset)
    k, n, d = system.nullity, poset.n, poset.dim
    if k == 0:
        return FeasibilityResult(False, None, None, 0, (), system, cone)
    basis = system.nullspace_basis
    # variables: t_1..t_k, sigma
    A_ub, b_ub = [], []
    for g in cone.forms:
        row = [-sum(gc * b[i] for i, gc in enumerate(g.coeffs)) for b in basis]
        A_ub.append(row + [1])
        b_ub.append(0)
    A_eq = [[sum(b) for b in basis] + [0]]
    b_eq = [d]
    c = [0] * k + [1]
    lp = simplex.linprog(c, A_ub, b_ub, A_eq, b_eq, exact=exact)
    if lp.status == simplex.INFEASIBLE:
        return FeasibilityResult(False, None, None, k, (), system, cone)
    if lp.status != simplex.OPTIMAL:
        raise LPNumericalFailure(f"slack LP is {lp.status}")
    t, sigma = lp.x[:k], lp.x[k]
    sample = _combine(basis, t)
    active = tuple(
        g.label for g in cone.forms
        if (g(sample) == sigma if exact else abs(g(sample) - sigma) <= EPS_SLACK)
    )
    feasible = sigma > 0 if exact else sigma > EPS_SLACK
    if not feasible:
        return FeasibilityResult(False, None, sigma, k, active, system, cone)
    _verify(poset, sample, exact)
    return FeasibilityResult(True, sample, sigma, k, active, system, cone)


def _verify(poset: IntersectionPoset, sample, exact: bool) -> None:
    report = stability_report(poset, sample)
    q = q_evaluate(poset, sample)
    if exact:
        ok = report.stable and q.Q == 0 and not any(q.critQ_residual)
    else:
        total = sum(sample)
        ok = report.stable and abs(q.Q) <= 1e-10 * total * total
    if not ok:
        raise LPNumericalFailure("LP solution failed a posteriori verification")


def sample_feasible(
    arr: Arrangement,
    result: FeasibilityResult,
    count: int,
    seed: int = 0,
    poset: IntersectionPoset | None = None,
) -> list[tuple]:
    """Random interior points on segments from the LP center toward the cone boundary."""
    if not result.feasible:
        raise NotFeasible("no Dunkl weights to sample from")
    if poset is None:
        poset = enumerate_flats(arr)
    exact = result.system.exact
    rng = random.Random(seed)
    center = result.sample
    basis = result.system.nullspace_basis
    total = sum(center)
    forms = result.cone.forms
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100 * max(count, 1):
            raise NotFeasible("could not draw interior samples")
        r = [Fraction(rng.randint(-1000, 1000), 1000) for _ in basis]
        if not exact:
            r = [float(x) for x in r]
        direction = _combine(basis, r)
        shift = sum(direction) / total
        direction = tuple(x - shift * y for x, y in zip(direction, center))
        if not any(direction) or (not exact and max(map(abs, direction)) < 1e-12):
            if len(basis) == 1:
                out.append(center)
                continue
            continue
        limits = [g(center) / -g(direction) for g in forms if g(direction) < 0]
        step = min(limits) * Fraction(rng.randint(1, 900), 1000)
        if not exact:
            step = float(step)
        a = tuple(x + step * y for x, y in zip(center, direction))
        _verify(poset, a, exact)
        out.append(a)
    return out
