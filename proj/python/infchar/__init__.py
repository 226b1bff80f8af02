"""Exact infinitesimal characters of p-adic parameter data.

Thin dict-level wrappers around the compiled core: specs and root data go in
as dicts (or JSON strings), reports come back as dicts.  All exact values are
strings ("3", "5/2", "x+1"); nothing is ever a float.
"""

import json as _json

from ._core import (
    ComputationError,
    ValidationError,
    builtin_datum_json,
    compute_json,
    compute_text,
    delta as _delta,
    dualize_json,
    twisting as _twisting,
    validate_json,
    weyl_order as _weyl_order,
)

__all__ = [
    "ComputationError",
    "ValidationError",
    "builtin_datum",
    "compute",
    "compute_text",
    "delta",
    "dualize",
    "twisting",
    "validate",
    "weyl_order",
]


def _as_text(document):
    return document if isinstance(document, str) else _json.dumps(document)


def compute(spec, *, check_roundtrip=False, strict=False):
    """Validate a spec and run the full pipeline, returning the report dict.

    Computation failures (non-Hodge-Tate data, a non-split characteristic
    polynomial, ...) leave a partial report with the ``failures`` list
    populated; pass ``strict=True`` to raise on the first of them instead.
    Structural problems always raise ``ValidationError``.
    """
    report = _json.loads(compute_json(_as_text(spec), check_roundtrip))
    if strict and report["failures"]:
        raise ComputationError(report["failures"][0])
    return report


def validate(spec):
    """Parse and structurally validate a spec; raises ``ValidationError``."""
    validate_json(_as_text(spec))


def builtin_datum(family, n):
    """Builtin root datum (GL, SL, PGL, Sp, SO) as a dict."""
    return _json.loads(builtin_datum_json(family, n))


def dualize(datum):
    """Langlands dual of a root datum, as a dict."""
    return _json.loads(dualize_json(_as_text(datum)))


def weyl_order(datum):
    """Order of the Weyl group of a root datum."""
    return _weyl_order(_as_text(datum))


def delta(datum):
    """Half-sum of positive roots, as exact rational strings."""
    return _delta(_as_text(datum))


def twisting(datum):
    """Canonical twisting element as integer strings, or None."""
    return _twisting(_as_text(datum))
