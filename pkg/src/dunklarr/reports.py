"""JSON payloads for each CLI command."""

from __future__ import annotations

from collections import Counter

from .arrangement import IntersectionPoset
from .balance import BalanceResult
from .dunkl import ConditionFReport, DunklVerdict
from .hirzebruch import LangerStatistic, QEvaluation
from .jsonio import flat_dict, matrix, scalar, vector, weights_to_dict
from .stability import StabilityCone, StabilityReport, StabilityRow
from .weightfinder import FeasibilityResult


def poset_payload(poset: IntersectionPoset) -> dict:
    counts = {}
    for k in range(1, poset.dim + 1):
        c = Counter(f.multiplicity for f in poset.of_rank(k))
        if c:
            counts[str(k)] = {str(m): c[m] for m in sorted(c)}
    return {
        "n": poset.n,
        "d": poset.dim,
        "essential": poset.essential,
        "irreducible": poset.irreducible,
        "multiplicity_counts": counts,
        "flats": [flat_dict(f) for f in poset.flats],
        "rank2_irreducible": [list(f.members) for f in poset.g2()],
        "rank2_reducible_pairs": [list(p) for p in poset.rank2_reducible_pairs],
    }


def _row(r: StabilityRow) -> dict:
    return {"flat": list(r.flat.members), "a_L": scalar(r.a_L), "margin": scalar(r.margin)}


def stability_payload(rep: StabilityReport, cone: StabilityCone | None = None) -> dict:
    out = {
        "stable": rep.stable,
        "global_mean": scalar(rep.global_mean),
        "worst": _row(rep.worst),
        "rows": [_row(r) for r in rep.rows],
        "normalized_weights": vector(rep.normalized_weights),
    }
    if cone is not None:
        out["cone"] = [{"label": g.label, "coeffs": vector(g.coeffs)} for g in cone.forms]
    return out


def qform_payload(q: QEvaluation) -> dict:
    return {
        "Q": scalar(q.Q),
        "grad": vector(q.grad),
        "s": vector(q.s),
        "critQ_residual": vector(q.critQ_residual),
        "B": list(q.B),
        "local_weights": [{"flat": list(f.members), "a_L": scalar(a)} for f, a in q.local_weights],
    }


def balance_payload(b: BalanceResult) -> dict:
    out = {
        "status": b.status,
        "c": scalar(b.c),
        "residual": scalar(b.residual),
        "iterations": b.iterations,
        "reason": b.reason,
        "metric_residual": scalar(b.metric_residual),
        "certificate": _row(b.certificate) if b.certificate else None,
        "G": matrix(b.gauge) if b.gauge is not None else None,
        "M": matrix(b.metric) if b.metric is not None else None,
        "balanced_frame": matrix(b.balanced_frame) if b.balanced_frame is not None else None,
    }
    return out


def condition_f_payload(r: ConditionFReport) -> dict:
    return {
        "passed": r.passed,
        "max_commutator": r.max_commutator,
        "characterization_passed": r.characterization_passed,
        "commutators": [{"flat": list(c.flat), "index": c.index, "norm": c.norm} for c in r.rows],
        "orthogonality_rows": [{"pair": list(p), "abs_inner": x} for p, x in r.orthogonality_rows],
        "subframe_rows": [
            {"flat": list(m), "lhs": g.lhs, "rhs": g.rhs, "gap": g.gap, "is_tight": g.is_tight}
            for m, g in r.subframe_rows
        ],
    }


def dunkl_payload(v: DunklVerdict) -> dict:
    return {
        "decision": v.decision,
        "weights": vector(v.weights),
        "normalized_weights": vector(v.normalized_weights),
        "predicates": v.predicates,
        "certificates": list(v.certificates),
        "inconsistencies": list(v.inconsistencies),
        "stability": stability_payload(v.stability) if v.stability else None,
        "qform": qform_payload(v.q_eval) if v.q_eval else None,
        "balance": balance_payload(v.balance) if v.balance else None,
        "condition_f": condition_f_payload(v.condition_f) if v.condition_f else None,
    }


def feasibility_payload(r: FeasibilityResult, samples=()) -> dict:
    return {
        "feasible": r.feasible,
        "dimension": r.dimension,
        "slack": scalar(r.slack),
        "sample": weights_to_dict(r.sample) if r.sample is not None else None,
        "active_constraints": list(r.active_constraints),
        "nullspace_basis": [vector(b) for b in r.system.nullspace_basis],
        "samples": [weights_to_dict(s) for s in samples],
    }


def langer_payload(s: LangerStatistic) -> dict:
    return {
        "sum_mult": s.sum_mult,
        "bound": scalar(s.bound),
        "max_mult_ok": s.max_mult_ok,
        "holds": s.holds,
        "equality": s.equality,
    }
