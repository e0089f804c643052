"""Alternating multiple T-values: evaluation, relations and 3-posets."""

from ._amtv import (  # noqa: F401
    dual,
    duality_sign,
    evaluate,
    expand_poset,
    find_basis,
    from_word,
    psi_bar,
    pslq,
    shuffle,
    t_value,
    to_word,
    verify_catalog,
    weighted_sum,
)

__all__ = [
    "dual",
    "duality_sign",
    "evaluate",
    "expand_poset",
    "find_basis",
    "from_word",
    "psi_bar",
    "pslq",
    "shuffle",
    "t_value",
    "to_word",
    "verify_catalog",
    "weighted_sum",
]
