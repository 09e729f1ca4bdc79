"""Exact computations in the graph Hopf algebra.

Thin wrapper over the C++ extension: graphs and characters go in as spec
strings ("K4", "n=3; edges=0-1,1-2", "tau:2,0"), results come back as plain
dicts with exact rational coefficients rendered as "p/q" strings.
"""

import json as _json

from ._hopfgraph import (  # noqa: F401
    acyclic_count,
    canonical_text,
    char_eval,
    char_power_eval,
    flats_count,
    suite_names,
    verify_suite,
)
from . import _hopfgraph as _ext


def graph(spec):
    """Parsed graph as {"n": ..., "edges": [[u, v], ...]}."""
    return _json.loads(_ext.graph_json(spec))


def antipode(spec):
    """Antipode S(G): list of {"graph": text-spec, "coeff": rational string}."""
    return _json.loads(_ext.antipode_json(spec))


def tutte(spec):
    """Tutte polynomial terms: list of {"x": i, "y": j, "coeff": str}."""
    return _json.loads(_ext.tutte_json(spec))["terms"]


def chromatic(spec):
    return _json.loads(_ext.chromatic_json(spec))["terms"]


def degree_chromatic(spec, m):
    return _json.loads(_ext.degree_chromatic_json(spec, m))["terms"]


def poly_in_k(char_spec, graph_spec):
    return _json.loads(_ext.poly_in_k_json(char_spec, graph_spec))["terms"]
