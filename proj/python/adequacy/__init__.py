"""Adequacy checks for finite matrix groups over finite fields.

Group specs are JSON objects (or their text) of the form
``{"field": {"prime": p, "degree": k}, "dimension": n, "generators": [...]}``.
"""

import json
import os

from . import _core
from ._core import (
    DEFAULT_BOX_CAP,
    DEFAULT_ORDER_CAP,
    DEFAULT_UNKNOWN_CAP,
    AdequacyError,
    CapError,
    SpecError,
)

__all__ = [
    "AdequacyError",
    "CapError",
    "SpecError",
    "DEFAULT_BOX_CAP",
    "DEFAULT_ORDER_CAP",
    "DEFAULT_UNKNOWN_CAP",
    "load_spec",
    "normalize_spec",
    "report",
    "closure",
    "condition_c",
    "cohomology",
    "meataxe",
    "tensor_condition_c",
    "exp_nilpotent",
    "log_unipotent",
    "bounded_characters",
    "zoo",
]


def _text(spec):
    if isinstance(spec, (dict, list)):
        return json.dumps(spec)
    return spec


def load_spec(path):
    """Reads and validates a spec file; returns it as a dict."""
    with open(os.fspath(path)) as f:
        return normalize_spec(f.read())


def normalize_spec(spec):
    return json.loads(_core.normalize_spec(_text(spec)))


def report(spec, seed=0, cap_order=DEFAULT_ORDER_CAP, cap_unknowns=DEFAULT_UNKNOWN_CAP, witnesses=False):
    """The full adequacy report, keyed as in the CLI's --json output."""
    return json.loads(_core.report(_text(spec), seed, cap_order, cap_unknowns, witnesses))


def closure(spec, cap_order=DEFAULT_ORDER_CAP):
    return json.loads(_core.closure(_text(spec), cap_order))


def condition_c(spec, cap_order=DEFAULT_ORDER_CAP):
    return json.loads(_core.condition_c(_text(spec), cap_order))


def cohomology(spec, module="ad0", cap_order=DEFAULT_ORDER_CAP, cap_unknowns=DEFAULT_UNKNOWN_CAP):
    return json.loads(_core.cohomology(_text(spec), module, cap_order, cap_unknowns))


def meataxe(spec, module="natural", seed=0, cap_order=DEFAULT_ORDER_CAP):
    return json.loads(_core.meataxe(_text(spec), module, seed, cap_order))


def tensor_condition_c(a, b, cap_order=DEFAULT_ORDER_CAP):
    return _core.tensor_condition_c(_text(a), _text(b), cap_order)


def exp_nilpotent(p, x):
    return _core.exp_nilpotent(p, x)


def log_unipotent(p, u):
    return _core.log_unipotent(p, u)


def bounded_characters(l, frobenius, delta, half=False, box_cap=DEFAULT_BOX_CAP):
    return json.loads(_core.bounded_characters(l, frobenius, delta, half, box_cap))


def zoo(family="all"):
    """Corpus specs as dicts; family is all, sl2, sym, prime-to-l or negative."""
    return [json.loads(s) for s in _core.zoo(family)]
