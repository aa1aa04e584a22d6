"""Python bindings for the superlink engine."""

import json

from ._superlink import (
    Error,
    RootDatum,
    UnsupportedInput,
    antidominant_rep,
    block_label,
    classify,
    dot,
    kl_polynomial,
    run_cli,
    same_block,
    typicality_degree,
    validate,
    whittaker_length,
)


def validate_report(datum, box, jobs=1):
    """Partition report as a dict."""
    return json.loads(validate(datum, box, jobs))


__all__ = [
    "Error",
    "RootDatum",
    "UnsupportedInput",
    "antidominant_rep",
    "block_label",
    "classify",
    "dot",
    "kl_polynomial",
    "run_cli",
    "same_block",
    "typicality_degree",
    "validate",
    "validate_report",
    "whittaker_length",
]
