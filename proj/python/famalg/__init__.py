"""Exact symbolic kernel for family algebras End(V) (x) S(g).

Polynomials and matrices go in and come out as expression strings, e.g.
``"1/2*e*f + 1/8*h^2"`` or ``"[[h/2, f], [e, -h/2]]"``.
"""

import json

from ._core import (
    FamalgError,
    Family,
    ParseError,
    UnknownSuiteError,
    ValidationError,
    suite_names,
)

__all__ = [
    "FamalgError",
    "Family",
    "ParseError",
    "UnknownSuiteError",
    "ValidationError",
    "run_suite",
    "spec",
    "suite_names",
]


def run_suite(family, name, degree=3, seed=0, budget=2000):
    """Run one identity suite; returns the report as a dict."""
    return json.loads(family._suite(name, degree, seed, budget))


def spec(family):
    """The algebra and representation as a spec-file dict."""
    return json.loads(family._spec())
