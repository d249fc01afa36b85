"""Shared 12-significant-digit number formatting for all emitted output."""

from __future__ import annotations

import json
import math


def fmt12(x: float) -> str:
    """Decimal form with 12 significant digits."""
    return f"{x:.12g}"


def sig12(x: float) -> float:
    """Nearest double to the 12-significant-digit decimal form of ``x``."""
    if not math.isfinite(x):
        return x
    return float(fmt12(x))


def round12(obj):
    """Recursively round every float in a JSON-style structure to 12
    significant digits; non-finite floats become None."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return sig12(obj) if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round12(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps12(obj, **kwargs) -> str:
    """json.dumps with floats rendered at 12 significant digits."""
    return json.dumps(round12(obj), **kwargs)
