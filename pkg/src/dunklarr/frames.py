"""Finite frames in C^d: frame operator, Welch-type gap, HPD inverse square root.

A frame is an (n, d) complex array whose rows are the vectors v_i.  Inner
products are linear in the first slot: <x, y> = y^* x.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPositiveDefinite

TOL_TIGHT = 1e-10


def as_frame(vectors) -> np.ndarray:
    v = np.atleast_2d(np.asarray(vectors, dtype=complex))
    if v.shape[0] == 0:
        raise ValueError("empty frame")
    return v


def frame_operator(vectors) -> np.ndarray:
    """S = sum_i v_i v_i^*, the matrix of x -> sum_i <x, v_i> v_i."""
    v = as_frame(vectors)
    return v.T @ v.conj()


@dataclass(frozen=True)
class WelchGap:
    lhs: float
    rhs: float
    gap: float
    is_tight: bool


def welch_gap(vectors, dim: int | None = None, tol_tight: float = TOL_TIGHT) -> WelchGap:
    """lhs = sum_ij |<v_i, v_j>|^2 against rhs = (sum_i |v_i|^2)^2 / dim.

    lhs >= rhs always, with equality exactly for tight frames.  ``dim``
    defaults to the ambient dimension; pass the dimension of the span when the
    vectors live in a subspace.
    """
    v = as_frame(vectors)
    d = v.shape[1] if dim is None else dim
    gram = v.conj() @ v.T
    lhs = float(np.sum(np.abs(gram) ** 2))
    rhs = float(np.sum(np.abs(v) ** 2)) ** 2 / d
    gap = lhs - rhs
    return WelchGap(lhs, rhs, gap, gap <= tol_tight * rhs)


def tightness_defect(vectors) -> float:
    """||S - (tr S / d) Id||_F / tr S, zero exactly for tight frames."""
    s = frame_operator(vectors)
    d = s.shape[0]
    tr = np.trace(s).real
    return float(np.linalg.norm(s - tr / d * np.eye(d)) / tr)


def hpd_inv_sqrt(h, rel_floor: float = 1e-14) -> np.ndarray:
    """X Hermitian positive definite with X H X = Id."""
    h = np.asarray(h, dtype=complex)
    h = (h + h.conj().T) / 2
    w, u = np.linalg.eigh(h)
    if w[-1] <= 0 or w[0] <= rel_floor * w[-1]:
        raise NotPositiveDefinite(f"eigenvalues range over [{w[0]:.3e}, {w[-1]:.3e}]")
    return (u / np.sqrt(w)) @ u.conj().T
