"""Stability of weighted arrangements and the open cone of stable weights."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Flat, IntersectionPoset, require_standard
from .hirzebruch import local_weight
from .weights import is_exact

EPS_MARGIN = 1e-12


@dataclass(frozen=True)
class StabilityRow:
    flat: Flat
    a_L: object
    margin: object


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    global_mean: object
    rows: tuple
    worst: StabilityRow
    normalized_weights: tuple


def stability_report(poset: IntersectionPoset, weights, flats=None) -> StabilityReport:
    """Compare a_L with the global mean (1/d) sum a_i over every irreducible
    flat of rank 1..d-1 (irreducible flats suffice for stability).

    ``flats`` overrides the set of flats tested; it exists so the shortcut can
    be checked against the full list of proper flats.
    """
    require_standard(poset)
    exact = is_exact(weights)
    d = poset.dim
    total = sum(weights)
    mean = Fraction(total, d) if exact else total / d
    if flats is None:
        flats = poset.proper_irreducible()
    rows = []
    for f in flats:
        aL = local_weight(weights, f)
        rows.append(StabilityRow(f, aL, mean - aL))
    worst = min(rows, key=lambda r: r.margin)
    if exact:
        stable = worst.margin > 0
        norm = tuple(Fraction(d) * x / total for x in weights)
    else:
        stable = worst.margin > EPS_MARGIN * total
        norm = tuple(d * x / total for x in weights)
    return StabilityReport(bool(stable), mean, tuple(rows), worst, norm)


@dataclass(frozen=True)
class LinearForm:
    label: str
    flat: Flat | None
    coeffs: tuple

    def __call__(self, a):
        return sum((c * x for c, x in zip(self.coeffs, a)), 0 * a[0])


@dataclass(frozen=True)
class StabilityCone:
    """Open cone {a : g(a) > 0 for all forms g}; forms have rational coefficients."""

    forms: tuple

    def contains(self, a, eps: float = 0.0) -> bool:
        return all(g(a) > eps for g in self.forms)

    def flat_forms(self):
        return [g for g in self.forms if g.flat is not None]


def stability_cone(poset: IntersectionPoset) -> StabilityCone:
    require_standard(poset)
    n, d = poset.n, poset.dim
    forms = []
    for f in poset.proper_irreducible():
        coeffs = [Fraction(1, d)] * n
        for i in f.members:
            coeffs[i] -= Fraction(1, f.rank)
        forms.append(LinearForm("flat " + ",".join(map(str, f.members)), f, tuple(coeffs)))
    for i in range(n):
        coeffs = [Fraction(0)] * n
        coeffs[i] = Fraction(1)
        forms.append(LinearForm(f"positive {i}", None, tuple(coeffs)))
    return StabilityCone(tuple(forms))
