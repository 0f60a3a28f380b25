"""Residue endomorphisms, the codimension-2 commutator test, and the decision pipeline.

A weighted arrangement admits a Dunkl metric iff it is stable and Q(a) = 0,
iff it is stable and the critical-point equations s_i(a) = (d-1)/d sum a_j hold.
``dunkl_decision`` evaluates all three predicates independently and reports any
disagreement instead of reconciling it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arrangement import Arrangement, IntersectionPoset, enumerate_flats
from .balance import BalanceResult, balance
from .errors import NotConverged
from .frames import WelchGap, welch_gap
from .hirzebruch import QEvaluation, q_evaluate
from .stability import StabilityReport, stability_report
from .weights import is_exact, make_weights, normalized

DUNKL = "dunkl"
NOT_DUNKL = "not_dunkl"
NOT_APPLICABLE = "not_applicable"

TOL_BALANCE = 1e-12
TOL_F = 1e-8
TOL_Q = 1e-10


@dataclass(frozen=True)
class ResidueSet:
    matrices: np.ndarray  # (n, d, d), A_i = a_i u_i u_i^*
    weights: tuple
    gauge: BalanceResult = field(repr=False)


def residues(result: BalanceResult) -> ResidueSet:
    if not result.converged:
        raise NotConverged(f"balance status is {result.status}")
    u = result.balanced_frame
    a = np.array([float(x) for x in result.weights])
    mats = a[:, None, None] * np.einsum("ni,nj->nij", u, u.conj())
    return ResidueSet(mats, result.weights, result)


@dataclass(frozen=True)
class CommutatorRow:
    flat: tuple
    index: int
    norm: float


@dataclass(frozen=True)
class ConditionFReport:
    rows: tuple
    max_commutator: float
    orthogonality_rows: tuple  # ((i, j), |<u_i, u_j>|)
    subframe_rows: tuple  # (flat members, WelchGap)
    passed: bool
    characterization_passed: bool

    @property
    def characterization_agrees(self) -> bool:
        return self.passed == self.characterization_passed


def condition_f_check(res: ResidueSet, poset: IntersectionPoset, tol_F: float = TOL_F) -> ConditionFReport:
    """||[A_i, sum_{j in L} A_j]||_F for every codimension-2 flat L and i in L.

    Also evaluates the equivalent pair of conditions: balanced vectors of
    double points are orthogonal, and on every flat of multiplicity >= 3 the
    vectors sqrt(a_i) u_i form a tight frame of the 2-dimensional span.  The
    verdict comes from the commutators alone.
    """
    if not res.gauge.converged:
        raise NotConverged("residues come from an unconverged balance")
    A = res.matrices
    rows = []
    for f in poset.of_rank(2):
        total = A[list(f.members)].sum(axis=0)
        for i in f.members:
            comm = A[i] @ total - total @ A[i]
            rows.append(CommutatorRow(f.members, i, float(np.linalg.norm(comm))))
    max_comm = max((r.norm for r in rows), default=0.0)

    u = res.gauge.balanced_frame
    orth = tuple(
        ((i, j), float(abs(np.vdot(u[j], u[i])))) for i, j in poset.rank2_reducible_pairs
    )
    a = np.array([float(x) for x in res.weights])
    sub = []
    for f in poset.g2():
        idx = list(f.members)
        sub.append((f.members, welch_gap(np.sqrt(a[idx])[:, None] * u[idx], dim=2)))
    char_ok = all(x <= tol_F for _, x in orth) and all(g.gap <= tol_F * g.rhs for _, g in sub)
    return ConditionFReport(tuple(rows), max_comm, orth, tuple(sub), max_comm <= tol_F, char_ok)


@dataclass(frozen=True)
class DunklVerdict:
    decision: str
    weights: tuple
    normalized_weights: tuple
    predicates: dict
    certificates: tuple
    inconsistencies: tuple = ()
    stability: StabilityReport | None = None
    q_eval: QEvaluation | None = None
    balance: BalanceResult | None = None
    condition_f: ConditionFReport | None = None

    @property
    def consistent(self) -> bool:
        return not self.inconsistencies


def dunkl_decision(
    arr: Arrangement,
    weights,
    tol_balance: float = TOL_BALANCE,
    tol_F: float = TOL_F,
    tol_Q: float = TOL_Q,
    max_iter: int = 10000,
    poset: IntersectionPoset | None = None,
) -> DunklVerdict:
    """Decide whether (arr, weights) carries a Dunkl metric.

    Stages: essential/irreducible gate, stability, Q and the critical-point
    residuals, then (for stable weights) balance and the commutator test.
    Balance runs for every stable input so that the metric predicate is
    evaluated independently of Q.
    """
    weights = make_weights(weights, arr.n, exact=is_exact(weights))
    if poset is None:
        poset = enumerate_flats(arr)
    d = arr.dim
    norm_w = normalized(weights, d)
    if not (poset.essential and poset.irreducible):
        reason = "arrangement is not essential" if not poset.essential else "arrangement is reducible"
        return DunklVerdict(NOT_APPLICABLE, weights, norm_w, {}, (reason,))

    exact = is_exact(weights)
    total = sum(weights)
    stab = stability_report(poset, weights)
    q = q_evaluate(poset, weights)
    max_res = max(abs(x) for x in q.critQ_residual)
    if exact:
        q_zero = q.Q == 0
        crit_zero = max_res == 0
    else:
        q_zero = abs(q.Q) <= tol_Q * total * total
        crit_zero = max_res <= math.sqrt(tol_Q) * total

    predicates = {
        "stable": stab.stable,
        "stable_and_Q_zero": stab.stable and q_zero,
        "stable_and_critical": stab.stable and crit_zero,
        "dunkl_metric": None,
    }
    certificates = []
    inconsistencies = []
    bal = condf = None

    if not stab.stable:
        w = stab.worst
        certificates.append(
            f"unstable: flat {list(w.flat.members)} has a_L = {w.a_L} >= global mean {stab.global_mean}"
        )
    else:
        if q.Q > 0 and not q_zero:
            inconsistencies.append(f"Q = {q.Q} > 0 on stable weights")
        bal = balance(
            arr, [float(x) for x in norm_w], tol=tol_balance, max_iter=max_iter,
            precheck=False, poset=poset,
        )
        if bal.converged:
            condf = condition_f_check(residues(bal), poset, tol_F)
            predicates["dunkl_metric"] = condf.passed
            if not condf.passed:
                r = max(condf.rows, key=lambda r: r.norm)
                certificates.append(
                    f"condition (F) fails: commutator norm {r.norm:.3e} at flat {list(r.flat)}, hyperplane {r.index}"
                )
        else:
            certificates.append(f"balance {bal.status}: {bal.reason}")
            if q_zero:
                inconsistencies.append("balance did not converge on stable weights")
        if not q_zero:
            k = max(range(arr.n), key=lambda i: abs(q.critQ_residual[i]))
            certificates.append(
                f"Q = {q.Q} < 0; critical-point residual {q.critQ_residual[k]} at hyperplane {k}"
            )

    if predicates["stable_and_Q_zero"] != predicates["stable_and_critical"]:
        inconsistencies.append("Q = 0 and the critical-point equations disagree")
    if predicates["dunkl_metric"] is not None and predicates["dunkl_metric"] != predicates["stable_and_Q_zero"]:
        inconsistencies.append("condition (F) verdict disagrees with Q = 0")

    if stab.stable and q_zero and predicates["dunkl_metric"]:
        decision = DUNKL
        certificates.append(
            f"stable, Q = {q.Q}, max commutator {condf.max_commutator:.3e}"
        )
    else:
        decision = NOT_DUNKL
    return DunklVerdict(
        decision, weights, norm_w, predicates, tuple(certificates), tuple(inconsistencies),
        stab, q, bal, condf,
    )
