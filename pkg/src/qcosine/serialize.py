"""Deterministic text encoding for CSV and JSON outputs.

Floats render with 17 significant digits, enough to round-trip IEEE doubles,
and files are written as UTF-8 with LF line endings, so identical inputs
produce byte-identical artifacts on every platform.
"""

from __future__ import annotations

import json
import math


def float17(value: float) -> str:
    """17-significant-digit decimal form of a finite float."""
    value = float(value)
    if not math.isfinite(value):
        raise ValueError("refusing to serialize a non-finite float")
    return format(value, ".17g")


def _encode(obj) -> str:
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return float17(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_encode(item) for item in obj) + "]"
    if isinstance(obj, dict):
        parts = []
        for key in sorted(obj):
            if not isinstance(key, str):
                raise TypeError("JSON object keys must be strings")
            parts.append(f"{json.dumps(key)}:{_encode(obj[key])}")
        return "{" + ",".join(parts) + "}"
    raise TypeError(f"cannot serialize object of type {type(obj).__name__}")


def dumps_canonical(obj) -> str:
    """Compact JSON with sorted keys and float17 numbers."""
    return _encode(obj)


def write_text(path, text: str) -> None:
    """Write text as UTF-8 with untranslated LF newlines."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
