import json

from . import _core
from ._core import PreconditionError, compare, count_by_tau, enumerate, hasse_dot, tau_of

__all__ = [
    "PreconditionError",
    "analyze",
    "compare",
    "count_by_tau",
    "dims",
    "enumerate",
    "hasse",
    "hasse_dot",
    "random_space",
    "related",
    "space",
    "tau_of",
    "waring",
]


def space(forms, degree, field="Fp:101"):
    basis = [{"degree": degree, "coeffs": [str(c) for c in f]} for f in forms]
    return {"degree": degree, "field": field, "basis": basis}


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def analyze(space_doc):
    return json.loads(_core.analyze(_text(space_doc)))


def dims(H, d, j):
    return json.loads(_core.dims(H, d, j))


def hasse(d, j):
    return json.loads(_core.hasse(d, j))


def waring(space_doc):
    return json.loads(_core.waring(_text(space_doc)))


def related(space_doc):
    return json.loads(_core.related(_text(space_doc)))


def random_space(d, j, field="Fp:101", seed=1):
    return json.loads(_core.random_space(d, j, field, seed))
