"""Python access to the rsurf core.

Classes are written "a;b1,...,bk" and forms "nu|c1,...,ck"; rational
values come back as exact strings such as "1/3".
"""

import json

from . import _core
from ._core import (
    ConsistencyError,
    DimensionError,
    ParseError,
    PreconditionError,
    area,
    canonical_class,
    classify_face,
    enumerate_roots,
    is_reduced,
    pairing,
    positive_root_count,
    sample_face,
    table_markdown,
    table_matches_golden,
)

__all__ = [
    "ConsistencyError",
    "DimensionError",
    "ParseError",
    "PreconditionError",
    "area",
    "canonical_class",
    "classify_face",
    "enumerate_roots",
    "is_reduced",
    "pairing",
    "positive_root_count",
    "pure_braid_ab",
    "reduce_class",
    "reduce_form",
    "report",
    "sample_face",
    "sphere_braid_ab",
    "table_markdown",
    "table_matches_golden",
    "verify",
]


def reduce_class(x):
    return json.loads(_core.reduce_class(x))


def reduce_form(w):
    return json.loads(_core.reduce_form(w))


def report(w, auto_reduce=False):
    return json.loads(_core.report(w, auto_reduce))


def pure_braid_ab(n, quotient=True):
    return json.loads(_core.pure_braid_ab(n, quotient))


def sphere_braid_ab(n):
    return json.loads(_core.sphere_braid_ab(n))


def verify(seed=None):
    return json.loads(_core.verify(seed) if seed is not None else _core.verify())
