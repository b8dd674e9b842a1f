"""Exact classification of irreducible Yetter-Drinfeld modules."""

import json

from ._core import (
    CheckFailed,
    Error,
    FieldNotSplitting,
    ParseError,
    VerifyError,
    builtin_names,
    crosscheck_group,
    export_hopf,
    sha256_hex,
    table,
    verify,
)
from ._core import classify_record as _classify_record

__all__ = [
    "CheckFailed",
    "Error",
    "FieldNotSplitting",
    "ParseError",
    "VerifyError",
    "builtin_names",
    "classify",
    "crosscheck_group",
    "export_hopf",
    "sha256_hex",
    "table",
    "verify",
]


def classify(builtin="", path="", seed=0, field=0, max_den=1 << 16, verify=True):
    """Classification record as a dict."""
    return json.loads(_classify_record(builtin, path, seed, field, max_den, verify))
