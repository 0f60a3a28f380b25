"""The Hirzebruch quadratic form of an arrangement and the linear data around it.

For a weight vector a the form is

    Q(a) = sum_{L in G2} a_L^2 - 1/2 sum_i B_i a_i^2 - 1/(2d) (sum_i a_i)^2,

where G2 are the irreducible codimension-2 flats, a_L = (1/r(L)) sum_{i in L} a_i
and B_i + 1 counts the G2 flats inside H_i.  The functions s_i satisfy
s_i + dQ/da_i = (d-1)/d sum_j a_j identically, so a is a critical point of Q
exactly when s_i(a) = (d-1)/d sum_j a_j for all i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import IntersectionPoset, require_standard
from .errors import WrongDimension
from .weights import is_exact


def local_weight(weights, flat):
    """a_L = (1/r(L)) * sum of the weights of the hyperplanes containing L."""
    total = sum(weights[i] for i in flat.members)
    if is_exact(weights):
        return Fraction(total) / flat.rank
    return total / flat.rank


@dataclass(frozen=True)
class QEvaluation:
    Q: object
    grad: tuple
    s: tuple
    critQ_residual: tuple
    B: tuple
    local_weights: tuple  # (flat, a_L) for each G2 flat


def b_counts(poset: IntersectionPoset) -> tuple:
    counts = [-1] * poset.n
    for f in poset.g2():
        for i in f.members:
            counts[i] += 1
    return tuple(counts)


def q_evaluate(poset: IntersectionPoset, weights, check: bool = True) -> QEvaluation:
    """Q, its gradient, s and the critical-point residual in a single pass over flats.

    Weights may be any real vector (positivity is not needed by the formulas).
    Float inputs are summed in flat order for reproducibility.
    """
    if check:
        require_standard(poset)
    n, d = poset.n, poset.dim
    exact = is_exact(weights)
    zero = Fraction(0) if exact else 0.0
    a = [Fraction(x) for x in weights] if exact else [float(x) for x in weights]
    total = sum(a, zero)
    B = b_counts(poset)
    sum_aL = [zero] * n
    s = [zero] * n
    sq = zero
    local = []
    for f in poset.g2():
        aL = local_weight(a, f)
        local.append((f, aL))
        sq += aL * aL
        for i in f.members:
            sum_aL[i] += aL
    for i, j in poset.rank2_reducible_pairs:
        s[i] += a[j]
        s[j] += a[i]
    half = Fraction(1, 2) if exact else 0.5
    inv_d = Fraction(1, d) if exact else 1.0 / d
    Q = sq - half * sum((B[i] * a[i] * a[i] for i in range(n)), zero) - half * inv_d * total * total
    grad = tuple(sum_aL[i] - B[i] * a[i] - inv_d * total for i in range(n))
    s = tuple(s[i] + sum_aL[i] for i in range(n))
    target = (d - 1) * inv_d * total
    residual = tuple(x - target for x in s)
    return QEvaluation(Q, grad, s, residual, B, tuple(local))


def q_value(poset: IntersectionPoset, weights):
    return q_evaluate(poset, weights, check=False).Q


@dataclass(frozen=True)
class LangerStatistic:
    sum_mult: int
    bound: Fraction
    max_mult_ok: bool
    holds: bool

    @property
    def equality(self) -> bool:
        return self.sum_mult == self.bound


def langer_statistic(poset: IntersectionPoset) -> LangerStatistic:
    """Total multiplicity of the intersection points of n lines in the projective plane
    against the lower bound n^2/3 + n (meaningful when every point has
    multiplicity < 2n/3)."""
    if poset.dim != 3:
        raise WrongDimension(f"the line-arrangement statistic needs d = 3, got d = {poset.dim}")
    n = poset.n
    if n < 3:
        raise WrongDimension("need at least 3 lines")
    mults = [f.multiplicity for f in poset.of_rank(2)]
    sum_mult = sum(mults)
    bound = Fraction(n * n, 3) + n
    max_ok = all(3 * m < 2 * n for m in mults)
    return LangerStatistic(sum_mult, bound, max_ok, sum_mult >= bound)
