"""Principal simple-type inference for closed de Bruijn terms.

Constraint generation walks the AST with a context stack indexed by
binder depth; first-order unification with occurs check solves the
constraints.  Unification is iterative so large terms cannot overflow
the recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .enumeration import enumerate_terms
from .terms import Abs, App, Idx, Term, max_free_index


class NotClosed(ValueError):
    """Inference is only defined for closed terms."""


@dataclass(frozen=True)
class TyVar:
    id: int


@dataclass(frozen=True)
class Arrow:
    domain: "SimpleType"
    codomain: "SimpleType"


SimpleType = TyVar | Arrow


class _Unifier:
    """Union-find over type variables with arrow bindings."""

    def __init__(self):
        self.binding: list[Optional[SimpleType]] = []

    def fresh(self) -> TyVar:
        self.binding.append(None)
        return TyVar(len(self.binding) - 1)

    def _prune(self, t: SimpleType) -> SimpleType:
        while isinstance(t, TyVar) and self.binding[t.id] is not None:
            t = self.binding[t.id]
        return t

    def unify(self, a: SimpleType, b: SimpleType) -> bool:
        stack = [(a, b)]
        while stack:
            x, y = stack.pop()
            x, y = self._prune(x), self._prune(y)
            if x == y:
                continue
            if isinstance(x, TyVar):
                if self._occurs(x, y):
                    return False
                self.binding[x.id] = y
            elif isinstance(y, TyVar):
                if self._occurs(y, x):
                    return False
                self.binding[y.id] = x
            else:
                stack.append((x.domain, y.domain))
                stack.append((x.codomain, y.codomain))
        return True

    def _occurs(self, v: TyVar, t: SimpleType) -> bool:
        stack = [t]
        while stack:
            u = self._prune(stack.pop())
            if u == v:
                return True
            if isinstance(u, Arrow):
                stack.append(u.domain)
                stack.append(u.codomain)
        return False

    def resolve(self, t: SimpleType) -> SimpleType:
        t = self._prune(t)
        if isinstance(t, TyVar):
            return t
        return Arrow(self.resolve(t.domain), self.resolve(t.codomain))


def _normalize(t: SimpleType) -> SimpleType:
    """Renumber variables by first occurrence, left to right."""
    mapping: dict[int, int] = {}

    def go(u: SimpleType) -> SimpleType:
        if isinstance(u, TyVar):
            if u.id not in mapping:
                mapping[u.id] = len(mapping)
            return TyVar(mapping[u.id])
        return Arrow(go(u.domain), go(u.codomain))

    return go(t)


def infer(t: Term) -> Optional[SimpleType]:
    """Principal simple type of a closed term, or None if untypable."""
    if max_free_index(t) != 0:
        raise NotClosed(f"term has free indices: {t}")
    uni = _Unifier()

    def go(u: Term, ctx: list[SimpleType]) -> Optional[SimpleType]:
        if isinstance(u, Idx):
            return ctx[-1 - u.k]
        if isinstance(u, Abs):
            dom = uni.fresh()
            ctx.append(dom)
            cod = go(u.body, ctx)
            ctx.pop()
            return None if cod is None else Arrow(dom, cod)
        fun = go(u.fun, ctx)
        if fun is None:
            return None
        arg = go(u.arg, ctx)
        if arg is None:
            return None
        result = uni.fresh()
        if not uni.unify(fun, Arrow(arg, result)):
            return None
        return result

    ty = go(t, [])
    if ty is None:
        return None
    return _normalize(uni.resolve(ty))


def render_type(t: SimpleType) -> str:
    if isinstance(t, TyVar):
        # a, b, ..., z, t26, t27, ...
        return chr(ord("a") + t.id) if t.id < 26 else f"t{t.id}"
    dom = render_type(t.domain)
    if isinstance(t.domain, Arrow):
        dom = f"({dom})"
    return f"{dom}->{render_type(t.codomain)}"


def count_typable(n: int) -> tuple[int, int]:
    """(typable, closed) census at size ``n``."""
    typable = 0
    closed = 0
    for t in enumerate_terms(n, free_bound=0):
        closed += 1
        if infer(t) is not None:
            typable += 1
    return typable, closed
