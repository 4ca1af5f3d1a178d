"""Exhaustive term generation, the brute-force oracle behind every count.

Terms of a given size are produced in a fixed documented order: indices
first (ascending), then abstractions (bodies in order), then applications
by ascending size of the left operand (then left order, then right order).
Sub-streams are memoized per (size, free bound, size model) so repeated
queries are cheap and golden outputs are stable.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional

from .terms import Abs, App, Idx, SizeModel, Term


class Family(Enum):
    NORMAL_FORM = "normal"
    NEUTRAL = "neutral"
    HEAD_NF = "hnf"
    NEUTRAL_HNF = "neutral-hnf"


@lru_cache(maxsize=None)
def _terms(n: int, free: Optional[int], model: SizeModel) -> tuple[Term, ...]:
    wa, wp, ws, wz = model.value
    if n < 0:
        return ()
    out: list[Term] = []
    # indices: size wz + k*ws
    rem = n - wz
    if rem >= 0 and rem % ws == 0:
        k = rem // ws
        if free is None or k < free:
            out.append(Idx(k))
    # abstractions
    inner = None if free is None else free + 1
    out.extend(Abs(b) for b in _terms(n - wa, inner, model))
    # applications, by ascending left size
    lo = 0 if wz == 0 else 1
    for left_size in range(lo, n - wp - lo + 1):
        rights = _terms(n - wp - left_size, free, model)
        if not rights:
            continue
        for f in _terms(left_size, free, model):
            out.extend(App(f, a) for a in rights)
    return tuple(out)


def enumerate_terms(
    n: int,
    free_bound: Optional[int] = None,
    model: SizeModel = SizeModel.NATURAL,
) -> Iterator[Term]:
    """All terms of size ``n`` whose free indices lie below ``free_bound``.

    ``free_bound=None`` means no bound (plain terms); ``free_bound=0``
    yields closed terms.
    """
    if n < 0:
        raise ValueError("size must be non-negative")
    if free_bound is not None and free_bound < 0:
        raise ValueError("free bound must be non-negative")
    yield from _terms(n, free_bound, model)


@lru_cache(maxsize=None)
def _family_terms(n: int, family: Family) -> tuple[Term, ...]:
    # Grammar-based generation over plain terms (natural size):
    #   normal  = neutral | \normal
    #   neutral = index | (neutral normal)
    #   hnf     = neutral-hnf | \hnf
    #   neutral-hnf = index | (neutral-hnf term)
    if n < 1:
        return ()
    out: list[Term] = []
    out.append(Idx(n - 1))
    if family in (Family.NORMAL_FORM, Family.HEAD_NF):
        out.extend(Abs(b) for b in _family_terms(n - 1, family))
    if family in (Family.NEUTRAL, Family.NEUTRAL_HNF):
        left = family
        for left_size in range(1, n - 1):
            if family is Family.NEUTRAL:
                rights = _family_terms(n - 1 - left_size, Family.NORMAL_FORM)
            else:
                rights = _terms(n - 1 - left_size, None, SizeModel.NATURAL)
            if not rights:
                continue
            for f in _family_terms(left_size, left):
                out.extend(App(f, a) for a in rights)
    if family is Family.NORMAL_FORM:
        # normal = neutral + \normal; the index/abs cases are emitted above,
        # neutral applications come from the neutral generator.
        apps = [t for t in _family_terms(n, Family.NEUTRAL) if isinstance(t, App)]
        out.extend(apps)
    if family is Family.HEAD_NF:
        apps = [t for t in _family_terms(n, Family.NEUTRAL_HNF) if isinstance(t, App)]
        out.extend(apps)
    return tuple(out)


def enumerate_family(n: int, family: Family) -> Iterator[Term]:
    """All plain terms of natural size ``n`` in the given syntactic family."""
    if n < 0:
        raise ValueError("size must be non-negative")
    yield from _family_terms(n, family)


def count(
    n: int,
    family: Optional[Family] = None,
    free_bound: Optional[int] = None,
    model: SizeModel = SizeModel.NATURAL,
) -> int:
    """Length of the corresponding stream."""
    if family is not None:
        return len(_family_terms(n, family))
    return len(_terms(n, free_bound, model))
