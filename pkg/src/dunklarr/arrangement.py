"""Central complex hyperplane arrangements and their intersection posets.

Hyperplanes are stored by normal covectors; every combinatorial question is a
question about the linear matroid of those normals.  Indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    DuplicateHyperplane,
    InputError,
    NotEssentialOrReducible,
    ZeroNormal,
)
from .gaussq import GaussianRational

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"

DUPLICATE_TOL = 1e-12


@dataclass(frozen=True)
class Arrangement:
    dim: int
    normals: tuple
    scalar_mode: str = "exact"
    labels: tuple | None = None
    _rank_cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def n(self) -> int:
        return len(self.normals)

    @property
    def exact(self) -> bool:
        return self.scalar_mode == "exact"

    def complex_normals(self) -> np.ndarray:
        """n x d complex array of the normals."""
        return np.array([[complex(x) for x in v] for v in self.normals], dtype=complex)

    def field_rows(self) -> tuple:
        """Normals as exact rows; plain Fractions when every entry is real (much faster)."""
        rows = self._rank_cache.get("rows")
        if rows is None:
            if self.exact and all(not x.im for v in self.normals for x in v):
                rows = tuple(tuple(x.re for x in v) for v in self.normals)
            else:
                rows = self.normals
            self._rank_cache["rows"] = rows
        return rows

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"H{i}"


@dataclass(frozen=True)
class Flat:
    members: tuple
    rank: int
    kind: str

    @property
    def multiplicity(self) -> int:
        return len(self.members)

    @property
    def irreducible(self) -> bool:
        return self.kind == IRREDUCIBLE


@dataclass(frozen=True)
class IntersectionPoset:
    arrangement: Arrangement
    flats: tuple
    rank2_irreducible: tuple
    rank2_reducible_pairs: tuple
    essential: bool
    irreducible: bool

    @property
    def dim(self) -> int:
        return self.arrangement.dim

    @property
    def n(self) -> int:
        return self.arrangement.n

    @property
    def exact(self) -> bool:
        return self.arrangement.exact

    def of_rank(self, k: int) -> list[Flat]:
        return [f for f in self.flats if f.rank == k]

    def g2(self) -> list[Flat]:
        """Irreducible codimension-2 flats."""
        return [self.flats[k] for k in self.rank2_irreducible]

    def proper_irreducible(self) -> list[Flat]:
        """Irreducible flats other than {0}, i.e. of rank 1..d-1."""
        return [f for f in self.flats if f.irreducible and f.rank < self.dim]


def _is_multiple(v, w, exact: bool) -> bool:
    if exact:
        d = len(v)
        return all(
            v[a] * w[b] - v[b] * w[a] == 0 for a in range(d) for b in range(a + 1, d)
        )
    v = np.asarray(v, dtype=complex)
    w = np.asarray(w, dtype=complex)
    ip = abs(np.vdot(w, v)) ** 2
    return ip >= (1 - DUPLICATE_TOL) * np.vdot(v, v).real * np.vdot(w, w).real


def validate_arrangement(
    dim: int,
    raw_normals: Sequence[Sequence],
    scalar_mode: str = "exact",
    labels: Sequence[str] | None = None,
) -> Arrangement:
    """Check and freeze an arrangement; normals are stored as given (no rescaling)."""
    if scalar_mode not in ("exact", "float"):
        raise InputError(f"unknown scalar mode {scalar_mode!r}")
    if dim < 2:
        raise DimensionMismatch(f"dimension must be at least 2, got {dim}")
    raw_normals = list(raw_normals)
    if len(raw_normals) < 2:
        raise InputError("an arrangement needs at least 2 hyperplanes")
    if labels is not None and len(labels) != len(raw_normals):
        raise InputError("labels and normals differ in length")
    exact = scalar_mode == "exact"
    conv = GaussianRational.coerce if exact else complex
    normals = []
    for i, v in enumerate(raw_normals):
        if len(v) != dim:
            raise DimensionMismatch(f"normal {i} has {len(v)} entries, expected {dim}")
        v = tuple(conv(x) for x in v)
        if not any(v):
            raise ZeroNormal(i)
        normals.append(v)
    for j in range(len(normals)):
        for i in range(j):
            if _is_multiple(normals[i], normals[j], exact):
                raise DuplicateHyperplane(i, j)
    return Arrangement(dim, tuple(normals), scalar_mode, tuple(labels) if labels else None)


def rank(arr: Arrangement, index_set: Iterable[int]) -> int:
    """Dimension of the span of the selected normals, i.e. codimension of their intersection."""
    key = frozenset(index_set)
    cached = arr._rank_cache.get(key)
    if cached is None:
        rows = arr.field_rows()
        cached = linalg.rank([rows[i] for i in sorted(key)], arr.exact)
        arr._rank_cache[key] = cached
    return cached


def _basis(arr: Arrangement, members: Sequence[int]) -> list[int]:
    basis: list[int] = []
    for i in members:
        if rank(arr, basis + [i]) > len(basis):
            basis.append(i)
    return basis


def classify_flat(arr: Arrangement, flat) -> str:
    """Decide whether the localized arrangement splits as a direct sum.

    Uses the fundamental-circuit graph: fix a basis, join every non-basis
    element to the basis elements appearing in its expansion; the matroid is
    connected exactly when this graph is.
    """
    members = sorted(flat.members if isinstance(flat, Flat) else flat)
    if len(members) <= 1:
        return IRREDUCIBLE
    basis = _basis(arr, members)
    parent = {i: i for i in members}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rows = arr.field_rows()
    bvecs = [rows[b] for b in basis]
    for e in members:
        if e in basis:
            continue
        for k in linalg.nonzero_coefficients(bvecs, rows[e], arr.exact):
            parent[find(e)] = find(basis[k])
    roots = {find(i) for i in members}
    return IRREDUCIBLE if len(roots) == 1 else REDUCIBLE


def _closure_members(arr: Arrangement, s: list[int]) -> tuple[tuple, int]:
    r = rank(arr, s)
    if arr.exact:
        normals = arr.field_rows()
        rows, pivots = linalg.rref_exact([normals[i] for i in s])
        rows = rows[: len(pivots)]
        members = tuple(
            i for i in range(arr.n)
            if i in s or linalg.in_span_exact(rows, pivots, normals[i])
        )
    else:
        members = tuple(i for i in range(arr.n) if i in s or rank(arr, s + [i]) == r)
    return members, r


def closure(arr: Arrangement, index_set: Iterable[int]) -> Flat:
    s = sorted(set(index_set))
    if not s:
        raise InputError("closure of the empty set is the ambient space, which is not a flat")
    members, r = _closure_members(arr, s)
    return Flat(members, r, classify_flat(arr, members))


def enumerate_flats(arr: Arrangement) -> IntersectionPoset:
    """All flats of rank 1..rank(arr), each rank generated from the previous one."""
    level = {(i,): 1 for i in range(arr.n)}
    found = dict(level)
    top = rank(arr, range(arr.n))
    for _ in range(1, top):
        nxt: dict[tuple, int] = {}
        for members in level:
            for i in range(arr.n):
                if i in members or any(set(members) | {i} <= set(g) for g in nxt):
                    continue
                g, r = _closure_members(arr, list(members) + [i])
                nxt[g] = r
        level = nxt
        found.update(level)
    flats = [Flat(m, r, classify_flat(arr, m)) for m, r in found.items()]
    flats.sort(key=lambda f: (f.rank, f.members))
    r2 = [k for k, f in enumerate(flats) if f.rank == 2 and f.irreducible]
    pairs = tuple(flats[k].members for k, f in enumerate(flats) if f.rank == 2 and not f.irreducible)
    essential = top == arr.dim
    full_irred = classify_flat(arr, range(arr.n)) == IRREDUCIBLE
    return IntersectionPoset(arr, tuple(flats), tuple(r2), pairs, essential, full_irred)


def global_properties(arr: Arrangement) -> tuple[bool, bool]:
    essential = rank(arr, range(arr.n)) == arr.dim
    irreducible = classify_flat(arr, range(arr.n)) == IRREDUCIBLE
    return essential, irreducible


def require_standard(poset: IntersectionPoset) -> None:
    if not (poset.essential and poset.irreducible):
        raise NotEssentialOrReducible(
            f"arrangement must be essential and irreducible "
            f"(essential={poset.essential}, irreducible={poset.irreducible})"
        )
