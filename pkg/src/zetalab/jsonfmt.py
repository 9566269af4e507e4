"""Deterministic JSON rendering for the CLI and service payloads.

Every numeric leaf is emitted as a decimal string: floats through '%.15g'
(15 significant digits, enough to make re-runs byte-identical without
exposing platform float-repr quirks), integers in full exact decimal
(counts and zeta coefficients are exact objects; truncating them to 15
digits would corrupt them). Complex values become [re, im] string pairs.
Key order is the construction order, which handlers keep fixed.
"""

from __future__ import annotations

import json
import math

from zetalab.errors import DomainError

SCHEMA_VERSION = 1


def fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise DomainError("non-finite value cannot be serialized")
    out = "%.15g" % float(x)
    if out == "-0":
        out = "0"
    return out


def fmt_int(n: int) -> str:
    return str(int(n))


def fmt_complex(z: complex) -> list[str]:
    return [fmt_float(z.real), fmt_float(z.imag)]


def dumps(payload: dict) -> str:
    """Canonical rendering: two-space indent, fixed separators, trailing
    newline; identical payloads give identical bytes."""
    return json.dumps(payload, indent=2, separators=(",", ": "), ensure_ascii=True) + "\n"
