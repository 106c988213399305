"""Acylindrical hyperbolicity checker for Artin-Tits groups of labeled graphs.

The compiled core exchanges JSON strings; the wrappers here accept either a
JSON string or a plain dict and hand back parsed dicts.
"""

import json as _json

from atlink import _core

ParseError = _core.ParseError
PreconditionError = _core.PreconditionError
CertificateError = _core.CertificateError


def _as_text(graph):
    if isinstance(graph, str):
        return graph
    return _json.dumps(graph)


def classify(graph):
    """Classification report for a labeled graph."""
    return _json.loads(_core.classify(_as_text(graph)))


def presentation(graph, kind="triangular"):
    """Standard or triangular presentation of the graph's group."""
    return _json.loads(_core.presentation(_as_text(graph), kind))


def link(graph, mode="isosceles"):
    """Vertex link of the presentation complex, with systole attached."""
    return _json.loads(_core.link(_as_text(graph), mode))


def orient(graph):
    """Appropriate direction of an almost-large graph, if one exists."""
    return _json.loads(_core.orient(_as_text(graph)))


def certify(graph):
    """Rank-one certificate, or None when the verdict carries none."""
    out = _core.certify(_as_text(graph))
    return None if out is None else _json.loads(out)


def verify(certificate):
    """Re-check a certificate produced by certify."""
    return _json.loads(_core.verify(_as_text(certificate)))


def selftest(max_vertices=4, labels=(2, 3), jobs=1):
    """Cross-check the solvers against brute-force oracles."""
    return _json.loads(_core.selftest(max_vertices, list(labels), jobs))


__all__ = [
    "CertificateError",
    "ParseError",
    "PreconditionError",
    "certify",
    "classify",
    "link",
    "orient",
    "presentation",
    "selftest",
    "verify",
]
