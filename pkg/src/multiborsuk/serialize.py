"""Canonical JSON emission: stable key order, integers plain, rationals as
"p/q" strings, reals rounded to 12 significant digits.  Identical inputs
therefore produce byte-identical output."""

from __future__ import annotations

import json
from fractions import Fraction


def format_real(x: float) -> float:
    return float(f"{x:.12g}")


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _canonize(obj):
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, bool) or isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return format_real(obj)
    if isinstance(obj, dict):
        return {k: _canonize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonize(v) for v in obj]
    return obj


def canonical_json(obj) -> str:
    return json.dumps(_canonize(obj), indent=2) + "\n"


def load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def save_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
