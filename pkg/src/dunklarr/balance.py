"""Balanced Hermitian metric of a stable weighted arrangement.

The solver moves the normals by a gauge G until the unit vectors
u_i = G v_i / |G v_i| satisfy sum_i a_i u_i u_i^* = c Id with c = sum a_i / d.
Each step replaces G by S^{-1/2} G where S is the current weighted frame
operator.  Near the boundary of the stability cone that scaling converges
linearly with a rate close to 1, so by default every step also tries a Newton
step for the log-capacity sum a_i log|G v_i|^2 - c log det(G^* G) and keeps
whichever candidate has the smaller residual.  The metric is then M = (G^* G)^{-1}; the M-orthogonal complement of
H_i is spanned by M^{-1} v_i.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .arrangement import Arrangement, IntersectionPoset, enumerate_flats, require_standard
from .errors import NotPositiveDefinite
from .frames import hpd_inv_sqrt
from .stability import StabilityRow, stability_report
from .weights import make_weights

log = logging.getLogger(__name__)

CONVERGED = "converged"
DIVERGED = "diverged"
MAX_ITER = "max_iter"

COND_LIMIT = 1e9


@dataclass(frozen=True)
class BalanceResult:
    status: str
    weights: tuple
    c: float
    residual: float
    iterations: int
    gauge: np.ndarray | None = None
    metric: np.ndarray | None = None
    balanced_frame: np.ndarray | None = None
    metric_residual: float | None = None
    certificate: StabilityRow | None = None
    reason: str = ""
    trace: tuple = field(default=(), repr=False)

    @property
    def converged(self) -> bool:
        return self.status == CONVERGED


def unit_frame(normals: np.ndarray, gauge: np.ndarray) -> np.ndarray:
    w = normals @ gauge.T
    return w / np.linalg.norm(w, axis=1, keepdims=True)


def weighted_frame_operator(frame: np.ndarray, weights) -> np.ndarray:
    a = np.asarray(weights, dtype=float)
    return (frame.T * a) @ frame.conj()


def metric_projections(normals: np.ndarray, metric: np.ndarray) -> list[np.ndarray]:
    """P_i: projection onto the metric-orthogonal complement of H_i, along H_i."""
    minv = np.linalg.inv(metric)
    out = []
    for v in normals:
        w = minv @ v
        out.append(np.outer(w, v.conj()) / (v.conj() @ w))
    return out


@lru_cache(maxsize=None)
def _hermitian_basis(d: int) -> np.ndarray:
    """Orthonormal real basis of the d x d Hermitian matrices."""
    out = []
    for k in range(d):
        e = np.zeros((d, d), dtype=complex)
        e[k, k] = 1
        out.append(e)
    r = 1 / np.sqrt(2)
    for k in range(d):
        for l in range(k + 1, d):
            e = np.zeros((d, d), dtype=complex)
            e[k, l] = e[l, k] = r
            out.append(e)
            e = np.zeros((d, d), dtype=complex)
            e[k, l], e[l, k] = -1j * r, 1j * r
            out.append(e)
    return np.array(out)


def _residual(frame, a, c):
    s = weighted_frame_operator(frame, a)
    return float(np.linalg.norm(s - c * np.eye(len(s))) / c), s


def newton_step(frame: np.ndarray, a: np.ndarray, c: float) -> np.ndarray:
    """Hermitian X minimizing the quadratic model of the log-capacity at the
    current unit frame; the new gauge is exp(X/2) G."""
    d = frame.shape[1]
    basis = _hermitian_basis(d)
    s = weighted_frame_operator(frame, a)
    grad = np.einsum("kab,ba->k", basis, s - c * np.eye(d)).real
    # q[i, k] = u_i^* B_k u_i
    q = np.einsum("ia,kab,ib->ik", frame.conj(), basis, frame).real
    t = np.einsum("kab,lbc,ca->kl", basis, basis, s).real
    hess = (t + t.T) / 2 - (q.T * a) @ q
    x = np.linalg.lstsq(hess, -grad, rcond=1e-12)[0]
    return np.einsum("k,kab->ab", x, basis)


def _expm_half(x: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(x)
    return (v * np.exp(np.clip(w / 2, -50, 50))) @ v.conj().T


def balance(
    arr: Arrangement,
    weights,
    tol: float = 1e-12,
    max_iter: int = 10000,
    precheck: bool = True,
    g0=None,
    poset: IntersectionPoset | None = None,
    accelerate: bool = True,
) -> BalanceResult:
    """Solve for the balanced metric; always in float arithmetic."""
    if poset is None:
        poset = enumerate_flats(arr)
    require_standard(poset)
    weights = make_weights(weights, arr.n, exact=all(not isinstance(x, float) for x in weights))
    a = np.array([float(x) for x in weights])
    d = arr.dim
    c = float(a.sum() / d)

    if precheck:
        report = stability_report(poset, weights)
        if not report.stable:
            return BalanceResult(
                DIVERGED, weights, c, float("inf"), 0,
                certificate=report.worst, reason="unstable weights",
            )

    normals = arr.complex_normals()
    g = np.eye(d, dtype=complex) if g0 is None else np.array(g0, dtype=complex)
    trace = []
    status, reason = MAX_ITER, "iteration limit reached"
    it = 0
    residual = float("inf")
    frame = None
    frame = unit_frame(normals, g)
    residual, s = _residual(frame, a, c)
    for it in range(max_iter + 1):
        trace.append(residual)
        if residual < tol:
            status, reason = CONVERGED, ""
            break
        if it == max_iter:
            break
        try:
            g_next = hpd_inv_sqrt(s) @ g
        except NotPositiveDefinite:
            status, reason = DIVERGED, "frame operator became singular"
            break
        g_next /= np.linalg.norm(g_next)
        frame_next = unit_frame(normals, g_next)
        res_next, s_next = _residual(frame_next, a, c)
        if accelerate:
            g_newton = _expm_half(newton_step(frame, a, c)) @ g
            g_newton /= np.linalg.norm(g_newton)
            frame_newton = unit_frame(normals, g_newton)
            res_newton, s_newton = _residual(frame_newton, a, c)
            if res_newton < res_next:
                g_next, frame_next, res_next, s_next = g_newton, frame_newton, res_newton, s_newton
        g, frame, residual, s = g_next, frame_next, res_next, s_next
        if np.linalg.cond(g) > COND_LIMIT:
            status, reason = DIVERGED, "gauge condition number exceeded 1e9"
            break

    certificate = None
    if status != CONVERGED:
        log.info("balance stopped: %s after %d iterations (residual %.3e)", status, it, residual)
        report = stability_report(poset, weights)
        if not report.stable:
            certificate = report.worst
        return BalanceResult(
            status, weights, c, residual, it, gauge=g, balanced_frame=frame,
            certificate=certificate, reason=reason, trace=tuple(trace),
        )

    metric = np.linalg.inv(g.conj().T @ g)
    metric = (metric + metric.conj().T) / 2
    total = sum(ai * p for ai, p in zip(a, metric_projections(normals, metric)))
    metric_residual = float(np.linalg.norm(total - c * np.eye(d)) / c)
    return BalanceResult(
        CONVERGED, weights, c, residual, it, gauge=g, metric=metric,
        balanced_frame=frame, metric_residual=metric_residual, trace=tuple(trace),
    )
