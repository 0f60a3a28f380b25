"""JSON file formats and report serialization.

Arrangement file::

    {"d": 3, "mode": "exact", "normals": [[["1/1", "0/1"], ...], ...], "labels": [...]}

Weights file::

    {"weights": ["1/1", "2/3", ...]}      (numbers instead of strings in float mode)

Exact scalars are written as "p/q" strings, floats as JSON numbers (shortest
round-trip repr), complex matrices as row-major lists of [re, im] pairs.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .arrangement import Arrangement, Flat, validate_arrangement
from .errors import InputError
from .gaussq import GaussianRational, format_rational, parse_rational
from .weights import make_weights


def _read_json(path):
    raw = Path(path).read_bytes()
    try:
        return json.loads(raw), raw
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from exc


def arrangement_from_dict(data: dict) -> Arrangement:
    try:
        d = int(data["d"])
        mode = data.get("mode", "exact")
        rows = data["normals"]
        labels = data.get("labels")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed arrangement: {exc}") from exc
    normals = []
    for row in rows:
        vec = []
        for entry in row:
            if isinstance(entry, (list, tuple)):
                if len(entry) != 2:
                    raise InputError(f"complex entry must be [re, im], got {entry!r}")
                re, im = entry
            else:
                re, im = entry, 0
            try:
                if mode == "exact":
                    vec.append(GaussianRational(parse_rational(re), parse_rational(im)))
                else:
                    vec.append(complex(_to_float(re), _to_float(im)))
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad scalar {entry!r}: {exc}") from exc
        normals.append(vec)
    return validate_arrangement(d, normals, mode, labels)


def _to_float(x) -> float:
    if isinstance(x, str):
        return float(Fraction(x))
    return float(x)


def arrangement_to_dict(arr: Arrangement) -> dict:
    if arr.exact:
        normals = [[[format_rational(x.re), format_rational(x.im)] for x in v] for v in arr.normals]
    else:
        normals = [[[x.real, x.imag] for x in v] for v in arr.normals]
    out = {"d": arr.dim, "mode": arr.scalar_mode, "normals": normals}
    if arr.labels:
        out["labels"] = list(arr.labels)
    return out


def load_arrangement(path) -> tuple[Arrangement, bytes]:
    data, raw = _read_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: arrangement must be a JSON object")
    return arrangement_from_dict(data), raw


def convert_mode(arr: Arrangement, mode: str) -> Arrangement:
    if mode == arr.scalar_mode:
        return arr
    if mode == "float":
        normals = [[complex(x) for x in v] for v in arr.normals]
    else:
        normals = [[GaussianRational.coerce(complex(x)) for x in v] for v in arr.normals]
    return validate_arrangement(arr.dim, normals, mode, arr.labels)


def parse_weights(data, n: int, exact: bool) -> tuple:
    if not isinstance(data, dict) or "weights" not in data:
        raise InputError('weights file must be an object {"weights": [...]}')
    values = data["weights"]
    if not isinstance(values, list):
        raise InputError("weights must be a list")
    if exact:
        values = [v if isinstance(v, str) else str(v) for v in values]
    return make_weights(values, n, exact)


def load_weights(path, n: int, exact: bool) -> tuple[tuple, bytes]:
    data, raw = _read_json(path)
    return parse_weights(data, n, exact), raw


def weights_to_dict(weights) -> dict:
    return {"weights": [scalar(x) for x in weights]}


def scalar(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return format_rational(Fraction(x))
    if isinstance(x, GaussianRational):
        return [format_rational(x.re), format_rational(x.im)]
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if np.isfinite(x) else str(x)
    if isinstance(x, np.integer):
        return int(x)
    raise TypeError(f"cannot serialize scalar {x!r}")


def vector(xs) -> list:
    return [scalar(x) for x in xs]


def matrix(m) -> list:
    """Row-major complex matrix as [[[re, im], ...], ...]."""
    m = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def flat_dict(f: Flat) -> dict:
    return {"members": list(f.members), "rank": f.rank, "multiplicity": f.multiplicity, "class": f.kind}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"
