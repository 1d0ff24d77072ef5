"""JSON coefficient files.

Layout (indices are 1-based; ``a_1 = 1`` is implied and not stored)::

    {
      "a": [[re, im], ...],          # a_2, a_3, ...
      "b": [[re, im], ...],          # b_1, b_2, ...
      "tail": {"C": 1.0, "d": 2, "ratio": 1.0}   # optional; omitted = exact
    }

Floats are written with ``repr`` so a file reparses bit-for-bit.
"""

from __future__ import annotations

import json
import math

from .exceptions import HarmonicRadiusError
from .mapping import HarmonicMapping

__all__ = ["CoeffFileError", "dumps", "loads", "read", "write"]


class CoeffFileError(HarmonicRadiusError, ValueError):
    """Malformed coefficient file."""


def _pairs(doc, key):
    raw = doc.get(key, [])
    if not isinstance(raw, list):
        raise CoeffFileError(f"field '{key}': expected a list of [re, im] pairs")
    out = []
    for i, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)
        ):
            raise CoeffFileError(f"field '{key}'[{i}]: expected [re, im] with two numbers, got {item!r}")
        if not all(math.isfinite(v) for v in item):
            raise CoeffFileError(f"field '{key}'[{i}]: non-finite value {item!r}")
        out.append(complex(item[0], item[1]))
    return out


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CoeffFileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise CoeffFileError("top level must be a JSON object with fields 'a' and 'b'")
    unknown = set(doc) - {"a", "b", "tail"}
    if unknown:
        raise CoeffFileError(f"unknown field(s): {', '.join(sorted(unknown))}")
    a = [1.0 + 0j] + _pairs(doc, "a")
    b = _pairs(doc, "b")
    tail = doc.get("tail") or {}
    if not isinstance(tail, dict):
        raise CoeffFileError("field 'tail': expected an object {C, d, ratio}")
    try:
        C = float(tail.get("C", 0.0))
        d = float(tail.get("d", 0.0))
        ratio = float(tail.get("ratio", 1.0))
    except (TypeError, ValueError):
        raise CoeffFileError(f"field 'tail': numeric C, d, ratio expected, got {tail!r}") from None
    try:
        return HarmonicMapping.from_coefficients(a, b, C, d, ratio)
    except ValueError as exc:
        raise CoeffFileError(f"field 'tail': {exc}") from None


def read(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(f):
    if f.a1 != 1:
        raise CoeffFileError(f"coefficient files store normalized mappings (a_1 = 1), got {f.a1!r}")
    doc = {
        "a": [[c.real, c.imag] for c in f.h.coeffs[1:].tolist()],
        "b": [[c.real, c.imag] for c in f.g.coeffs.tolist()],
    }
    if not (f.h.exact and f.g.exact):
        if (f.h.tail_scale, f.h.tail_degree, f.h.tail_ratio) != (f.g.tail_scale, f.g.tail_degree, f.g.tail_ratio):
            C = max(f.h.tail_scale, f.g.tail_scale)
            d = max(f.h.tail_degree, f.g.tail_degree)
            ratio = max(f.h.tail_ratio, f.g.tail_ratio)
        else:
            C, d, ratio = f.h.tail_scale, f.h.tail_degree, f.h.tail_ratio
        doc["tail"] = {"C": C, "d": d, "ratio": ratio}
    return json.dumps(doc) + "\n"


def write(path, f):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(f))
