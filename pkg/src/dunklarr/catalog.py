"""Generators for standard test arrangements."""

from __future__ import annotations

import cmath
import random
from fractions import Fraction
from itertools import combinations

from .arrangement import Arrangement, enumerate_flats, global_properties, validate_arrangement
from .errors import BadParams, DuplicateHyperplane

FAMILIES = ("braid", "full_monomial_B", "dihedral_lines", "generic", "random_lines", "from_normals")


def braid(m: int) -> Arrangement:
    """Hyperplanes x_i = x_j restricted to the sum-zero subspace of C^m (d = m - 1).

    The subspace is parametrized by the basis e_k - e_m (k < m), so x_i - x_j
    becomes y_i - y_j for j < m, and x_i - x_m becomes y_i + sum_k y_k.
    """
    if m < 3:
        raise BadParams("braid(m) needs m >= 3")
    d = m - 1
    normals, labels = [], []
    for i, j in combinations(range(m), 2):
        if j < d:
            v = [0] * d
            v[i], v[j] = 1, -1
        else:
            v = [1] * d
            v[i] = 2
        normals.append(v)
        labels.append(f"x{i + 1}-x{j + 1}")
    return validate_arrangement(d, normals, "exact", labels)


def full_monomial_B(d: int) -> Arrangement:
    """Type B_d reflection arrangement: x_i - x_j, x_i + x_j, x_i  (n = d^2).

    Ordered as all differences, then all sums, then the coordinate hyperplanes.
    """
    if d < 2:
        raise BadParams("full_monomial_B(d) needs d >= 2")
    normals, labels = [], []
    for sign, name in ((-1, "-"), (1, "+")):
        for i, j in combinations(range(d), 2):
            v = [0] * d
            v[i], v[j] = 1, sign
            normals.append(v)
            labels.append(f"x{i + 1}{name}x{j + 1}")
    for i in range(d):
        v = [0] * d
        v[i] = 1
        normals.append(v)
        labels.append(f"x{i + 1}")
    return validate_arrangement(d, normals, "exact", labels)


_EXACT_ROOTS = {
    1: [(1, 0)],
    2: [(1, 0), (-1, 0)],
    4: [(1, 0), (0, 1), (-1, 0), (0, -1)],
}


def dihedral_lines(k: int, mode: str = "float") -> Arrangement:
    """k lines in C^2 with normals (1, z^j), z a primitive k-th root of unity.

    These normals form a tight frame, so the standard inner product is
    already balanced for equal weights.  Exact mode is only available when the
    roots of unity are Gaussian rationals (k = 2, 4).
    """
    if k < 2:
        raise BadParams("dihedral_lines(k) needs k >= 2")
    if mode == "exact":
        if k not in _EXACT_ROOTS:
            raise BadParams(f"dihedral_lines({k}) has irrational normals; use float mode")
        normals = [[(1, 0), z] for z in _EXACT_ROOTS[k]]
    else:
        normals = [[1, cmath.exp(2j * cmath.pi * j / k)] for j in range(k)]
    return validate_arrangement(2, normals, mode, [f"L{j + 1}" for j in range(k)])


def random_lines(n: int, seed: int, bound: int = 20) -> Arrangement:
    """n distinct random rational lines through 0 in C^2."""
    rng = random.Random(seed)
    slopes: list[Fraction] = []
    while len(slopes) < n:
        t = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if t not in slopes:
            slopes.append(t)
    return validate_arrangement(2, [[1, t] for t in slopes], "exact")


def generic(n: int, d: int, seed: int = 0, bound: int = 9, max_tries: int = 1000) -> Arrangement:
    """Random integer normals, resampled until every rank-2 flat is a double point.

    Essentiality is always required; irreducibility only when n > d, since
    n <= d independent hyperplanes can never form an irreducible arrangement.
    """
    if d < 2 or n < 2 or n < d:
        raise BadParams(f"generic({n}, {d}) is not realizable as an essential arrangement")
    rng = random.Random(seed)
    for _ in range(max_tries):
        normals = [[rng.randint(-bound, bound) for _ in range(d)] for _ in range(n)]
        try:
            arr = validate_arrangement(d, normals, "exact")
        except (DuplicateHyperplane, ValueError):
            continue
        essential, irreducible = global_properties(arr)
        if not essential or (n > d and not irreducible):
            continue
        poset = enumerate_flats(arr)
        if all(f.multiplicity == 2 for f in poset.of_rank(2)):
            return arr
    raise BadParams(f"no generic arrangement found for n={n}, d={d}")


def from_normals(d: int, normals, mode: str = "exact", labels=None) -> Arrangement:
    return validate_arrangement(d, normals, mode, labels)


def catalog(family: str, *params, seed: int = 0, mode: str | None = None) -> Arrangement:
    """Dispatch by family name; ``params`` are the integer family parameters."""
    try:
        if family == "braid":
            (m,) = params
            return braid(int(m))
        if family == "full_monomial_B":
            (d,) = params
            return full_monomial_B(int(d))
        if family == "dihedral_lines":
            (k,) = params
            return dihedral_lines(int(k), mode or "float")
        if family == "generic":
            n, d = params[:2]
            if len(params) > 2:
                seed = int(params[2])
            return generic(int(n), int(d), seed)
        if family == "random_lines":
            n = params[0]
            if len(params) > 1:
                seed = int(params[1])
            return random_lines(int(n), seed)
        if family == "from_normals":
            d, normals = params
            return from_normals(int(d), normals, mode or "exact")
    except ValueError as exc:
        if isinstance(exc, BadParams):
            raise
        raise BadParams(f"bad parameters for {family}: {params}") from exc
    raise BadParams(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
