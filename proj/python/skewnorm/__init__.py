"""Exact arithmetic and normalization in skew polynomial rings."""

import json

from ._core import (
    Error,
    Poly,
    Ring,
    cns_witness,
    evaluate,
    formal_substitute,
    gm_check,
    is_automorphic,
    monicize,
    reduce,
    replay_report,
    run_cli,
)


def normalize(ring, relations):
    """Eliminate variables with the given witness relations; returns the report as a dict."""
    from ._core import normalize_json

    return json.loads(normalize_json(ring, list(relations)))


__all__ = [
    "Error",
    "Poly",
    "Ring",
    "cns_witness",
    "evaluate",
    "formal_substitute",
    "gm_check",
    "is_automorphic",
    "monicize",
    "normalize",
    "reduce",
    "replay_report",
    "run_cli",
]
