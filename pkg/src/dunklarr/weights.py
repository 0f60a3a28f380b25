"""Positive weight vectors, exact (Fraction) or float."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InputError, LengthMismatch, NonPositiveWeight


def make_weights(values: Sequence, n: int | None = None, exact: bool = True) -> tuple:
    """Validate and convert; raises on wrong length or a non-positive entry."""
    values = list(values)
    if n is not None and len(values) != n:
        raise LengthMismatch(f"expected {n} weights, got {len(values)}")
    out = []
    for i, x in enumerate(values):
        if isinstance(x, bool):
            raise InputError(f"weight {i} is a boolean")
        try:
            x = Fraction(x) if exact else float(Fraction(x) if isinstance(x, str) else x)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"weight {i} is not a number: {x!r}") from exc
        if not x > 0:
            raise NonPositiveWeight(i, x)
        out.append(x)
    return tuple(out)


def is_exact(weights) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in weights)


def normalized(weights, total) -> tuple:
    """Rescale so the entries sum to ``total``."""
    s = sum(weights)
    if is_exact(weights):
        return tuple(Fraction(total) * x / s for x in weights)
    return tuple(float(total) * x / s for x in weights)
