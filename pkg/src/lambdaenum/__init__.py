"""Exact enumerative combinatorics of lambda terms in de Bruijn notation."""

from .terms import (
    Abs,
    App,
    Idx,
    SizeModel,
    Term,
    classify,
    contains_subterm,
    max_free_index,
    parse_term,
    render_term,
    size,
)

__all__ = [
    "Abs",
    "App",
    "Idx",
    "SizeModel",
    "Term",
    "classify",
    "contains_subterm",
    "max_free_index",
    "parse_term",
    "render_term",
    "size",
]
