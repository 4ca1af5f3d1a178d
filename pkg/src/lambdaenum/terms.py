"""Lambda terms over de Bruijn indices: AST, syntax, sizes, predicates.

A term is an abstraction, an application, or a de Bruijn index.  An index
``Idx(k)`` stands for k successors applied to zero, so it occupies k+1
"nodes" under the unit size model even though it is stored as a single
integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class TermSyntaxError(ValueError):
    """Raised on malformed concrete syntax; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Abs:
    body: "Term"


@dataclass(frozen=True)
class App:
    fun: "Term"
    arg: "Term"


@dataclass(frozen=True)
class Idx:
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("de Bruijn index must be non-negative")


Term = Abs | App | Idx


class SizeModel(Enum):
    """Node weights as (abstraction, application, successor, zero)."""

    NATURAL = (1, 1, 1, 1)
    A1 = (1, 2, 1, 0)
    MINF = (1, 1, 1, 0)

    @property
    def w_abs(self) -> int:
        return self.value[0]

    @property
    def w_app(self) -> int:
        return self.value[1]

    @property
    def w_succ(self) -> int:
        return self.value[2]

    @property
    def w_zero(self) -> int:
        return self.value[3]


def size(t: Term, model: SizeModel = SizeModel.NATURAL) -> int:
    """Weighted node count of ``t``; Idx(k) weighs like S^k applied to zero."""
    wa, wp, ws, wz = model.value
    total = 0
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, Idx):
            total += u.k * ws + wz
        elif isinstance(u, Abs):
            total += wa
            stack.append(u.body)
        else:
            total += wp
            stack.append(u.fun)
            stack.append(u.arg)
    return total


def parse_term(text: str) -> Term:
    """Parse the canonical grammar: ``\\term``, ``(term term)`` or an index."""
    pos = 0

    def parse(depth: int) -> Term:
        nonlocal pos
        if pos >= len(text):
            raise TermSyntaxError("unexpected end of input", pos)
        c = text[pos]
        if c == "\\":
            pos += 1
            return Abs(parse(depth + 1))
        if c == "(":
            pos += 1
            fun = parse(depth + 1)
            if pos >= len(text) or text[pos] != " ":
                raise TermSyntaxError("expected single space in application", pos)
            pos += 1
            arg = parse(depth + 1)
            if pos >= len(text) or text[pos] != ")":
                raise TermSyntaxError("expected ')'", pos)
            pos += 1
            return App(fun, arg)
        if c.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            literal = text[start:pos]
            if len(literal) > 1 and literal[0] == "0":
                raise TermSyntaxError("index literal has a leading zero", start)
            if len(literal) > 4000:
                raise TermSyntaxError("index literal too large", start)
            return Idx(int(literal))
        raise TermSyntaxError(f"unexpected character {c!r}", pos)

    t = parse(0)
    if pos != len(text):
        raise TermSyntaxError("trailing input", pos)
    return t


def render_term(t: Term) -> str:
    """Canonical text form; inverse of :func:`parse_term`."""
    parts: list[str] = []

    def emit(u: Term) -> None:
        if isinstance(u, Idx):
            parts.append(str(u.k))
        elif isinstance(u, Abs):
            parts.append("\\")
            emit(u.body)
        else:
            parts.append("(")
            emit(u.fun)
            parts.append(" ")
            emit(u.arg)
            parts.append(")")

    emit(t)
    return "".join(parts)


def max_free_index(t: Term) -> int:
    """Least m >= 0 such that every free index of ``t`` is below m."""

    def go(u: Term, depth: int) -> int:
        if isinstance(u, Idx):
            return max(0, u.k + 1 - depth)
        if isinstance(u, Abs):
            return go(u.body, depth + 1)
        return max(go(u.fun, depth), go(u.arg, depth))

    return go(t, 0)


def is_closed(t: Term) -> bool:
    return max_free_index(t) == 0


@dataclass(frozen=True)
class TermClass:
    is_normal: bool
    is_neutral: bool
    is_hnf: bool
    is_neutral_hnf: bool


def _is_normal(t: Term) -> bool:
    if isinstance(t, Idx):
        return True
    if isinstance(t, Abs):
        return _is_normal(t.body)
    return not isinstance(t.fun, Abs) and _is_normal(t.fun) and _is_normal(t.arg)


def _is_neutral(t: Term) -> bool:
    # neutral = normal form whose application spine ends in an index
    if isinstance(t, Idx):
        return True
    if isinstance(t, App):
        return _is_neutral(t.fun) and _is_normal(t.arg)
    return False


def _is_neutral_hnf(t: Term) -> bool:
    # head index applied to arbitrary plain terms
    while isinstance(t, App):
        t = t.fun
    return isinstance(t, Idx)


def classify(t: Term) -> TermClass:
    """Syntactic classification: normal, neutral, head normal, neutral hnf."""
    body = t
    while isinstance(body, Abs):
        body = body.body
    return TermClass(
        is_normal=_is_normal(t),
        is_neutral=_is_neutral(t),
        is_hnf=_is_neutral_hnf(body),
        is_neutral_hnf=_is_neutral_hnf(t),
    )


def _matches_at(t: Term, pattern: Term) -> bool:
    # An index is a successor chain, so Idx(j) is a subtree of Idx(k) for j <= k.
    if isinstance(pattern, Idx):
        return isinstance(t, Idx) and pattern.k <= t.k
    return t == pattern


def contains_subterm(t: Term, pattern: Term) -> bool:
    """Whether ``pattern`` occurs as a subtree of ``t`` (successor chains expanded)."""
    stack = [t]
    while stack:
        u = stack.pop()
        if _matches_at(u, pattern):
            return True
        if isinstance(u, Abs):
            stack.append(u.body)
        elif isinstance(u, App):
            stack.append(u.fun)
            stack.append(u.arg)
    return False


# Classical combinators, used throughout the tests and the CLI examples.
K_COMB = Abs(Abs(Idx(1)))
S_COMB = Abs(Abs(Abs(App(App(Idx(2), Idx(0)), App(Idx(1), Idx(0))))))
OMEGA = App(Abs(App(Idx(0), Idx(0))), Abs(App(Idx(0), Idx(0))))
Y_COMB = Abs(
    App(
        Abs(App(Idx(1), App(Idx(0), Idx(0)))),
        Abs(App(Idx(1), App(Idx(0), Idx(0)))),
    )
)
