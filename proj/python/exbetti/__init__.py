"""Betti tables, corners and realizability for stable monomial ideals.

Ideals, modules and specs use the same JSON shapes as the command-line tool,
passed here as plain dicts.
"""

import json

from . import _exbetti
from ._exbetti import Error

__all__ = [
    "Error",
    "betti",
    "koszul_betti",
    "corners",
    "diagram",
    "is_strongly_stable",
    "is_stable",
    "check_values",
    "realize_ideal",
    "realize_module",
    "census",
]


def _dump(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def betti(doc):
    return json.loads(_exbetti.betti(_dump(doc)))


def koszul_betti(doc, cap=None):
    return json.loads(_exbetti.koszul_betti(_dump(doc), cap))


def corners(doc):
    return json.loads(_exbetti.corners(_dump(doc)))


def diagram(doc):
    return _exbetti.diagram(_dump(doc))


def is_strongly_stable(doc):
    return _exbetti.is_strongly_stable(_dump(doc))


def is_stable(doc):
    return _exbetti.is_stable(_dump(doc))


def check_values(spec, mode="coupled"):
    return json.loads(_exbetti.check_values(_dump(spec), mode))


def realize_ideal(spec, mode=None):
    return json.loads(_exbetti.realize_ideal(_dump(spec), mode))


def realize_module(spec, m=None, mode=None):
    return json.loads(_exbetti.realize_module(_dump(spec), m, mode))


def census(n, max_degree, max_gens=None):
    return [json.loads(line) for line in _exbetti.census(n, max_degree, max_gens)]
