"""Exact and bounded minimum max-degree-reducing vertex and edge sets."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import __version__, analyze_json, sweep_json, verify_json


def analyze(g, trials=0, seed=1, budget=DEFAULT_BUDGET):  # noqa: F405
    """Full analysis report of one graph as a dict."""
    return _json.loads(analyze_json(g, trials, seed, budget))


def verify(gnp_count=500, max_vertices=12, seed=1, trials=10_000):
    """Run every check over the default corpus; returns the report dict."""
    return _json.loads(verify_json(gnp_count, max_vertices, seed, trials))


def sweep(kind, k_min=2, k_max=50, points=200, mode=Mode.Abstract):  # noqa: F405
    """Region labels against direct comparison; returns the report dict."""
    return _json.loads(sweep_json(kind, k_min, k_max, points, mode))
