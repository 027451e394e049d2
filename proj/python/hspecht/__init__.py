"""Higher Specht polynomials for products of symmetric groups."""

import json

from ._hspecht import (
    BoundExceeded,
    Falsification,
    InvalidInput,
    apply_operator,
    classical_specht,
    diagrams,
    graded_rank_series,
    higher_specht,
    index_tableau,
    run_cli,
    tableaux,
    word,
)
from . import _hspecht

__all__ = [
    "BoundExceeded",
    "Falsification",
    "InvalidInput",
    "apply_operator",
    "classical_specht",
    "decompose",
    "diagrams",
    "graded_rank_series",
    "higher_specht",
    "index_tableau",
    "run_cli",
    "tableaux",
    "verify",
    "word",
]


def decompose(blocks, poly):
    """Generators and invariant coefficients of `poly` as a dict."""
    return json.loads(_hspecht.decompose_json(blocks, poly))


def verify(blocks, suite="all", max_degree=4, samples=100, **kwargs):
    """Run a verification suite and return the report as a dict."""
    return json.loads(_hspecht.verify_json(blocks, suite, max_degree, samples, **kwargs))
