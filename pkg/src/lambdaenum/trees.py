"""Tree families in bijection with term families, and the translations.

Three tree shapes appear:

* black-white trees: two-colored, black nodes carry only a left child,
  white nodes carry a white left part and an optional black-rooted right
  child; black-rooted trees of size n are as many as plain terms;
* zigzag-free trees: positional binary trees in which no left-child node
  has a right child without a left child;
* Motzkin trees: unary-binary trees, in bijection with neutral terms.

All translations work on the spine decomposition of a term: peel the
outer constructors down to the head index.  Reading the spine from the
head outwards gives first the successor chain, then a run of "white"
steps, one per abstraction or application (an application step carries
its function part as a detached subtree).  Black-white trees store that
spine along their leftmost branch; zigzag-free trees store the successor
chain along a right spine and the white steps along the left spine
hanging below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .terms import Abs, App, Idx, Term, classify


class MalformedInput(ValueError):
    """Input tree is outside the expected grammar."""


class NotNeutral(ValueError):
    """Term is not a neutral normal form."""


class NoImage(ValueError):
    """The bare zero index has no image under the hnf shift."""


# ---------------------------------------------------------------------------
# tree types


@dataclass(frozen=True)
class BwBlack:
    left: "BwBlack | BwWhite | None" = None


@dataclass(frozen=True)
class BwWhite:
    left: "BwWhite | None" = None
    right: "BwBlack | None" = None


BwTree = BwBlack | BwWhite


@dataclass(frozen=True)
class BzNode:
    left: "BzNode | None" = None
    right: "BzNode | None" = None


@dataclass(frozen=True)
class MLeaf:
    pass


@dataclass(frozen=True)
class MUnary:
    child: "MotzkinTree"


@dataclass(frozen=True)
class MBinary:
    left: "MotzkinTree"
    right: "MotzkinTree"


MotzkinTree = MLeaf | MUnary | MBinary


def bw_size(t: BwTree | None) -> int:
    if t is None:
        return 0
    if isinstance(t, BwBlack):
        return 1 + bw_size(t.left)
    return 1 + bw_size(t.left) + bw_size(t.right)


def bz_size(t: Optional[BzNode]) -> int:
    if t is None:
        return 0
    return 1 + bz_size(t.left) + bz_size(t.right)


def motzkin_size(t: MotzkinTree) -> int:
    if isinstance(t, MLeaf):
        return 1
    if isinstance(t, MUnary):
        return 1 + motzkin_size(t.child)
    return 1 + motzkin_size(t.left) + motzkin_size(t.right)


def is_zigzag_free(t: Optional[BzNode]) -> bool:
    """No left-child node may have a right child without a left child."""

    def ok(node: Optional[BzNode], as_left: bool) -> bool:
        if node is None:
            return True
        if as_left and node.right is not None and node.left is None:
            return False
        return ok(node.left, True) and ok(node.right, False)

    return ok(t, False)


# ---------------------------------------------------------------------------
# spine decomposition


def _term_spine(t: Term) -> tuple[int, list[Optional[Term]]]:
    """Head index and white steps in spine order (innermost step first).

    A ``None`` step is an abstraction; a term step is an application
    carrying its function part.
    """
    steps: list[Optional[Term]] = []
    while not isinstance(t, Idx):
        if isinstance(t, Abs):
            steps.append(None)
            t = t.body
        else:
            steps.append(t.fun)
            t = t.arg
    steps.reverse()
    return t.k, steps


def _term_from_spine(k: int, steps: list[Optional[Term]]) -> Term:
    t: Term = Idx(k)
    for s in steps:
        t = Abs(t) if s is None else App(s, t)
    return t


# ---------------------------------------------------------------------------
# lambda <-> black-white


def lambda_to_bw(t: Term) -> BwBlack:
    k, steps = _term_spine(t)
    node: BwBlack | BwWhite | None = None
    for s in reversed(steps):
        node = BwWhite(left=node, right=None if s is None else lambda_to_bw(s))
    for _ in range(k + 1):
        node = BwBlack(left=node)
    assert isinstance(node, BwBlack)
    return node


def _bw_spine(b: BwBlack) -> tuple[int, list[Optional[BwBlack]]]:
    """Black count minus one, and the white steps (right subtrees) in order."""
    blacks = 0
    cur: BwTree | None = b
    while isinstance(cur, BwBlack):
        blacks += 1
        cur = cur.left
    steps: list[Optional[BwBlack]] = []
    while isinstance(cur, BwWhite):
        steps.append(cur.right)
        cur = cur.left
    if cur is not None or blacks == 0:
        raise MalformedInput("not a black-rooted black-white tree")
    return blacks - 1, steps


def bw_to_lambda(b: BwBlack) -> Term:
    if not isinstance(b, BwBlack):
        raise MalformedInput("root must be black")
    k, steps = _bw_spine(b)
    return _term_from_spine(
        k, [None if s is None else bw_to_lambda(s) for s in steps]
    )


# ---------------------------------------------------------------------------
# lambda <-> zigzag-free


def _bz_build(k: int, rights: list[Optional[BzNode]]) -> BzNode:
    """Assemble the zigzag-free tree for a successor chain of length k+1
    followed by white steps whose application parts are already translated
    (``rights`` in spine order)."""
    node = BzNode()
    for r in reversed(rights):
        node = BzNode(left=node, right=r)
    for _ in range(k):
        node = BzNode(right=node)
    return node


def lambda_to_bz(t: Term) -> BzNode:
    k, steps = _term_spine(t)
    return _bz_build(
        k, [None if s is None else lambda_to_bz(s) for s in steps]
    )


def _bz_split(z: BzNode) -> tuple[int, list[Optional[BzNode]]]:
    """Inverse of :func:`_bz_build`; raises on non-zigzag-free shapes."""
    k = 0
    cur = z
    while cur.left is None and cur.right is not None:
        k += 1
        cur = cur.right
    rights: list[Optional[BzNode]] = []
    while cur.left is not None:
        rights.append(cur.right)
        cur = cur.left
    if cur.right is not None:
        # a left child with a right child but no left child: a zigzag
        raise MalformedInput("tree is not zigzag-free")
    return k, rights


def bz_to_lambda(z: BzNode) -> Term:
    k, rights = _bz_split(z)
    return _term_from_spine(
        k, [None if r is None else bz_to_lambda(r) for r in rights]
    )


# ---------------------------------------------------------------------------
# black-white <-> zigzag-free (directly, without passing through terms)


def bw_to_bz(b: BwBlack) -> BzNode:
    k, steps = _bw_spine(b)
    return _bz_build(
        k, [None if s is None else bw_to_bz(s) for s in steps]
    )


def bz_to_bw(z: BzNode) -> BwBlack:
    k, rights = _bz_split(z)
    node: BwBlack | BwWhite | None = None
    for r in reversed(rights):  # build upward from the leftmost white
        node = BwWhite(left=node, right=None if r is None else bz_to_bw(r))
    for _ in range(k + 1):
        node = BwBlack(left=node)
    assert isinstance(node, BwBlack)
    return node


# ---------------------------------------------------------------------------
# Motzkin <-> neutral normal forms


def motzkin_to_neutral(m: MotzkinTree) -> Term:
    height = 0
    cur = m
    while isinstance(cur, MUnary):
        height += 1
        cur = cur.child
    if isinstance(cur, MLeaf):
        # unary path ending in a leaf: a de Bruijn index (the leaf counts)
        return Idx(height)
    arg = motzkin_to_neutral(cur.right)
    for _ in range(height):
        arg = Abs(arg)
    return App(motzkin_to_neutral(cur.left), arg)


def neutral_to_motzkin(t: Term) -> MotzkinTree:
    if not classify(t).is_neutral:
        raise NotNeutral(f"not a neutral normal form: {t}")
    return _neutral_to_motzkin(t)


def _neutral_to_motzkin(t: Term) -> MotzkinTree:
    if isinstance(t, Idx):
        node: MotzkinTree = MLeaf()
        for _ in range(t.k):
            node = MUnary(node)
        return node
    assert isinstance(t, App)
    height = 0
    arg = t.arg
    while isinstance(arg, Abs):
        height += 1
        arg = arg.body
    node = MBinary(_neutral_to_motzkin(t.fun), _neutral_to_motzkin(arg))
    for _ in range(height):
        node = MUnary(node)
    return node


# ---------------------------------------------------------------------------
# neutral hnf <-> plain terms (size shift by one)


def khnf_shift(t: Term) -> Term:
    """Size-decreasing step from neutral head normal forms to plain terms."""
    if not classify(t).is_neutral_hnf:
        raise MalformedInput(f"not a neutral head normal form: {t}")
    args: list[Term] = []
    head = t
    while isinstance(head, App):
        args.append(head.arg)
        head = head.fun
    assert isinstance(head, Idx)
    args.reverse()
    if head.k > 0:
        out: Term = Idx(head.k - 1)
    else:
        if not args:
            raise NoImage("the bare zero index has no image")
        out = Abs(args.pop(0))
    for a in args:
        out = App(out, a)
    return out


def khnf_unshift(t: Term) -> Term:
    """Size-increasing inverse; total on plain terms."""
    args: list[Term] = []
    head = t
    while isinstance(head, App):
        args.append(head.arg)
        head = head.fun
    args.reverse()
    if isinstance(head, Idx):
        out: Term = Idx(head.k + 1)
    else:
        assert isinstance(head, Abs)
        out = App(Idx(0), head.body)
    for a in args:
        out = App(out, a)
    return out


# ---------------------------------------------------------------------------
# exhaustive tree generation (oracle support)


@lru_cache(maxsize=None)
def _bw_blacks(n: int) -> tuple[BwBlack, ...]:
    if n < 1:
        return ()
    out: list[BwBlack] = [BwBlack(w) for w in _bw_whites(n - 1)]
    out.extend(BwBlack(b) for b in _bw_blacks(n - 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _bw_whites(n: int) -> tuple[Optional[BwWhite], ...]:
    if n == 0:
        return (None,)
    out: list[Optional[BwWhite]] = []
    for left_size in range(n):
        for left in _bw_whites(left_size):
            rest = n - 1 - left_size
            if rest == 0:
                out.append(BwWhite(left=left, right=None))
            out.extend(
                BwWhite(left=left, right=r) for r in _bw_blacks(rest)
            )
    return tuple(out)


@lru_cache(maxsize=None)
def _bz_grammar_outer(n: int) -> tuple[BzNode, ...]:
    # outer sort: star with only a right child, or inner sort
    if n < 1:
        return ()
    out = [BzNode(right=t) for t in _bz_grammar_outer(n - 1)]
    out.extend(_bz_grammar_inner(n))
    return tuple(out)


@lru_cache(maxsize=None)
def _bz_grammar_inner(n: int) -> tuple[BzNode, ...]:
    if n < 1:
        return ()
    out: list[BzNode] = []
    if n == 1:
        out.append(BzNode())
    out.extend(BzNode(left=t) for t in _bz_grammar_inner(n - 1))
    for left_size in range(1, n - 1):
        for left in _bz_grammar_inner(left_size):
            out.extend(
                BzNode(left=left, right=r)
                for r in _bz_grammar_outer(n - 1 - left_size)
            )
    return tuple(out)


@lru_cache(maxsize=None)
def _binary_trees(n: int) -> tuple[Optional[BzNode], ...]:
    if n == 0:
        return (None,)
    out: list[Optional[BzNode]] = []
    for left_size in range(n):
        for left in _binary_trees(left_size):
            out.extend(
                BzNode(left=left, right=r)
                for r in _binary_trees(n - 1 - left_size)
            )
    return tuple(out)


@lru_cache(maxsize=None)
def _motzkin(n: int) -> tuple[MotzkinTree, ...]:
    if n < 1:
        return ()
    if n == 1:
        return (MLeaf(),)
    out: list[MotzkinTree] = [MUnary(t) for t in _motzkin(n - 1)]
    for left_size in range(1, n - 1):
        for left in _motzkin(left_size):
            out.extend(MBinary(left, r) for r in _motzkin(n - 1 - left_size))
    return tuple(out)


def enumerate_trees(n: int, kind: str) -> Iterator:
    """All trees of the kind ('bw', 'bz' or 'motzkin') with ``n`` nodes."""
    if kind == "bw":
        yield from _bw_blacks(n)
    elif kind == "bz":
        yield from _bz_grammar_outer(n)
    elif kind == "motzkin":
        yield from _motzkin(n)
    else:
        raise ValueError(f"unknown tree kind {kind!r}")


def enumerate_binary_trees(n: int) -> Iterator[Optional[BzNode]]:
    """All positional binary trees (no zigzag restriction), for cross-checks."""
    yield from _binary_trees(n)


# ---------------------------------------------------------------------------
# serialization (s-expressions) and dot output


def render_bw(t: BwTree | None) -> str:
    if t is None:
        return "()"
    if isinstance(t, BwBlack):
        return f"(B {render_bw(t.left)})"
    if t.right is None:
        return f"(W {render_bw(t.left)})"
    return f"(W {render_bw(t.left)} {render_bw(t.right)})"


def render_bz(t: Optional[BzNode]) -> str:
    if t is None:
        return "()"
    return f"(* {render_bz(t.left)} {render_bz(t.right)})"


def render_motzkin(t: MotzkinTree) -> str:
    if isinstance(t, MLeaf):
        return "L"
    if isinstance(t, MUnary):
        return f"(U {render_motzkin(t.child)})"
    return f"(N {render_motzkin(t.left)} {render_motzkin(t.right)})"


class _SexpParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> MalformedInput:
        return MalformedInput(f"{msg} at offset {self.pos}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def expect(self, ch: str) -> None:
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def done(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")


def parse_bw(text: str) -> Optional[BwTree]:
    p = _SexpParser(text.strip())

    def node() -> Optional[BwTree]:
        p.skip_ws()
        p.expect("(")
        p.skip_ws()
        if p.peek() == ")":
            p.pos += 1
            return None
        tag = p.peek()
        p.pos += 1
        if tag == "B":
            left = node()
            p.skip_ws()
            p.expect(")")
            if isinstance(left, BwWhite) or isinstance(left, BwBlack) or left is None:
                return BwBlack(left)
            raise p.error("bad black child")
        if tag == "W":
            left = node()
            p.skip_ws()
            right = None
            if p.peek() == "(":
                right = node()
                p.skip_ws()
            p.expect(")")
            if left is not None and not isinstance(left, BwWhite):
                raise p.error("white left part must be white")
            if right is not None and not isinstance(right, BwBlack):
                raise p.error("white right child must be black-rooted")
            return BwWhite(left=left, right=right)
        raise p.error("expected B or W")

    t = node()
    p.done()
    return t


def parse_bz(text: str) -> Optional[BzNode]:
    p = _SexpParser(text.strip())

    def node() -> Optional[BzNode]:
        p.skip_ws()
        p.expect("(")
        p.skip_ws()
        if p.peek() == ")":
            p.pos += 1
            return None
        p.expect("*")
        left = node()
        right = node()
        p.skip_ws()
        p.expect(")")
        return BzNode(left=left, right=right)

    t = node()
    p.done()
    return t


def parse_motzkin(text: str) -> MotzkinTree:
    p = _SexpParser(text.strip())

    def node() -> MotzkinTree:
        p.skip_ws()
        if p.peek() == "L":
            p.pos += 1
            return MLeaf()
        p.expect("(")
        p.skip_ws()
        tag = p.peek()
        p.pos += 1
        if tag == "U":
            child = node()
            p.skip_ws()
            p.expect(")")
            return MUnary(child)
        if tag == "N":
            left = node()
            right = node()
            p.skip_ws()
            p.expect(")")
            return MBinary(left, right)
        raise p.error("expected U or N")

    t = node()
    p.done()
    return t


def to_dot(t, kind: str) -> str:
    """Plain graphviz text for a tree of the given kind (no layout hints)."""
    lines = ["graph tree {"]
    counter = [0]

    def walk(node) -> int:
        my = counter[0]
        counter[0] += 1
        if kind == "bw":
            label = "black" if isinstance(node, BwBlack) else "white"
            children = [node.left] if isinstance(node, BwBlack) else [node.left, node.right]
        elif kind == "bz":
            label = "*"
            children = [node.left, node.right]
        else:
            label = {"MLeaf": "leaf", "MUnary": "unary", "MBinary": "binary"}[
                type(node).__name__
            ]
            if isinstance(node, MLeaf):
                children = []
            elif isinstance(node, MUnary):
                children = [node.child]
            else:
                children = [node.left, node.right]
        lines.append(f'  n{my} [label="{label}"];')
        for child in children:
            if child is not None:
                cid = walk(child)
                lines.append(f"  n{my} -- n{cid};")
        return my

    if t is not None:
        walk(t)
    lines.append("}")
    return "\n".join(lines)
