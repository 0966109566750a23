"""Clifford+CS repeat-until-success synthesis of one-qubit unitaries."""

import json as _json

from ._core import (
    __version__,
    approximate_json,
    enumerate_points,
    four_squares,
    synthesize_circuit_json,
    verify_json,
)

__all__ = [
    "__version__",
    "approximate",
    "approximate_json",
    "enumerate_points",
    "four_squares",
    "synthesize_circuit",
    "synthesize_circuit_json",
    "verify",
    "verify_json",
]


def approximate(target, epsilon, p_fail, **kwargs):
    """Run the pipeline and return the result document as a dict."""
    return _json.loads(approximate_json(target, str(epsilon), str(p_fail), **kwargs))


def verify(result):
    """Re-verify a result document (dict or JSON string)."""
    if not isinstance(result, str):
        result = _json.dumps(result)
    return _json.loads(verify_json(result))


def synthesize_circuit(n, u0, u1, budget=5000000):
    """Exact synthesis for the isometry of (n, u0, u1); returns a gate list."""
    u0 = [str(x) for x in u0]
    u1 = [str(x) for x in u1]
    return _json.loads(synthesize_circuit_json(n, u0, u1, budget))
