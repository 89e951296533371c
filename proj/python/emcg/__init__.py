"""Python bindings for the emcg exact-algebra library."""

import json

from ._core import classify_json as _core_classify
from ._core import (
    Error,
    arf,
    coset_count,
    decompose,
    eval_word,
    group_table,
    is_isomorphic,
    is_member,
    normal_form,
    orbit,
    reduce_mod2,
    run_cli,
    sp_order,
    stabilizer,
    verify_all,
)


def classify(family, n=None, p=None, q=None):
    """Classification of a knot family as a dict (same schema as `emcg classify --json`)."""
    return json.loads(_core_classify(family, n=n, p=p, q=q))


__all__ = [
    "Error",
    "arf",
    "classify",
    "coset_count",
    "decompose",
    "eval_word",
    "group_table",
    "is_isomorphic",
    "is_member",
    "normal_form",
    "orbit",
    "reduce_mod2",
    "run_cli",
    "sp_order",
    "stabilizer",
    "verify_all",
]
