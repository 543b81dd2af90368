"""JSON forms: labelings as ``{"n": int, "rows": [[str, ...], ...]}`` with
``rows[i-1][k] = a^i_k`` and rationals written "p" or "p/q"."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .hive_core import HiveError, Labeling


def rational_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_json(v: Any) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise HiveError(f"label {v!r} must be an integer or a 'p/q' string")
    try:
        return Fraction(v) if isinstance(v, int) else Fraction(str(v).strip())
    except (ValueError, ZeroDivisionError):
        raise HiveError(f"cannot parse rational {v!r}") from None


def labeling_to_json(h: Labeling) -> dict:
    return {"n": h.n, "rows": [[rational_to_str(x) for x in row] for row in h.rows]}


def labeling_from_json(data: dict) -> Labeling:
    try:
        n = data["n"]
        rows = data["rows"]
    except (KeyError, TypeError):
        raise HiveError('labeling JSON needs "n" and "rows"') from None
    if not isinstance(n, int) or isinstance(n, bool):
        raise HiveError('"n" must be an integer')
    return Labeling(n, tuple(tuple(rational_from_json(v) for v in row) for row in rows))


def dumps_labeling(h: Labeling) -> str:
    return json.dumps(labeling_to_json(h), separators=(",", ":"))


def load_labeling(path: str) -> Labeling:
    with open(path) as fh:
        return labeling_from_json(json.load(fh))


def save_labeling(h: Labeling, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(labeling_to_json(h), fh)
        fh.write("\n")
