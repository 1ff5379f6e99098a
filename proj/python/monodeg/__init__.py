"""Degree sequences of monomial maps, linear recurrences and spectral verdicts.

Matrices are lists of integer rows or a literal string such as
"[[-1,1,0],[-1,0,1],[1,0,0]]". Integers are exact Python ints.
"""

import json

from ._monodeg import (
    DEFAULT_PRECISION_BITS,
    MonodegError,
    berlekamp_massey,
    char_poly,
    check_candidate,
    degree,
    degree_sequence,
    det,
    dual_degree_sequence,
    find_recurrence,
    parse_matrix,
    run_cli,
)
from . import _monodeg

__all__ = [
    "DEFAULT_PRECISION_BITS",
    "MonodegError",
    "analyze",
    "berlekamp_massey",
    "cells",
    "char_poly",
    "check_candidate",
    "degree",
    "degree_sequence",
    "det",
    "dual_degree_sequence",
    "find_recurrence",
    "parse_matrix",
    "run_cli",
    "verdict",
]


def analyze(matrix, terms=40, max_order=None, guard=None, precision=DEFAULT_PRECISION_BITS, parallel=False):
    """Full report as a dict (same layout as `monodeg analyze --format json`)."""
    return json.loads(_monodeg.analysis_json(matrix, terms, max_order, guard, precision, parallel))


def verdict(matrix, precision=DEFAULT_PRECISION_BITS):
    """{"d1": ..., "basis": ..., "details": ..., "dual": ..., "input": ...}"""
    return json.loads(_monodeg.verdict_json(matrix, precision))


def cells(matrix, window=40):
    return json.loads(_monodeg.cells_json(matrix, window))
