"""Python front end for the pbound C++ core.

Every call returns the same JSON document the command line tool prints with
--json, decoded into Python objects.
"""

import json

from . import _core

__all__ = ["PboundError", "multiplicity", "bound", "darboux", "lotka_volterra", "analyze", "normalize_system"]

EXIT_OK, EXIT_FAILURE, EXIT_PARSE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class PboundError(Exception):
    def __init__(self, code, error):
        super().__init__(error.get("message", "pbound failed"))
        self.code = code
        self.error = error


def _run(command, **kw):
    code, text = _core.run_command(command, **kw)
    doc = json.loads(text)
    if "error" in doc:
        raise PboundError(code, doc["error"])
    return doc


def _point(at):
    if isinstance(at, str):
        return at
    z0, w0 = at
    return f"{z0},{w0}"


def multiplicity(system, at=(0, 0), caps=""):
    """Mul at a point; `at` is (z0, w0) or (z0, "inf")."""
    return _run("mul", system=system, at=_point(at), caps=caps)["result"]


def bound(system, line=None, caps="", threads=1):
    """Degree bound through the axis (axis-form input) or through a line a*z + b*w + c = 0."""
    ln = "" if line is None else ",".join(str(x) for x in line)
    return _run("bound", system=system, line=ln, caps=caps, threads=threads)["result"]


def darboux(system, max_degree=2, caps=""):
    return _run("darboux", system=system, max_degree=max_degree, caps=caps)["result"]


def lotka_volterra(a, b, c, caps=""):
    return _run("lv", params=f"{a},{b},{c}", caps=caps)


def analyze(system, at=None, max_degree=2, caps=""):
    return _run("analyze", system=system, at="" if at is None else _point(at), max_degree=max_degree, caps=caps)


def normalize_system(text):
    return _core.normalize_system(text)
