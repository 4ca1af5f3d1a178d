import pytest

from lambdaenum.simpletypes import (
    Arrow,
    NotClosed,
    TyVar,
    count_typable,
    infer,
    render_type,
)
from lambdaenum.terms import Idx, K_COMB, OMEGA, S_COMB, Y_COMB, parse_term


def test_identity():
    assert infer(parse_term("\\0")) == Arrow(TyVar(0), TyVar(0))


def test_k_combinator():
    assert render_type(infer(K_COMB)) == "a->b->a"


def test_s_combinator():
    assert render_type(infer(S_COMB)) == "(a->b->c)->(a->b)->a->c"


def test_self_application_untypable():
    assert infer(parse_term("\\(0 0)")) is None  # occurs check
    assert infer(OMEGA) is None
    assert infer(Y_COMB) is None


def test_church_numerals_and_pairs():
    two = parse_term("\\\\(1 (1 0))")
    assert render_type(infer(two)) == "(a->a)->a->a"
    # \x.\y.\f.(f x) y  needs nested arrows in the domain
    pair = parse_term("\\\\\\((0 2) 1)")
    assert render_type(infer(pair)) == "a->b->(a->b->c)->c"


def test_open_term_rejected():
    with pytest.raises(NotClosed):
        infer(Idx(0))
    with pytest.raises(NotClosed):
        infer(parse_term("\\1"))


def test_type_normalization_starts_at_a():
    # variables are renumbered by first occurrence regardless of
    # how many fresh variables unification burned through
    for text in ["\\0", "\\\\0", "\\\\1", "\\\\\\((2 0) (1 0))"]:
        rendered = render_type(infer(parse_term(text)))
        first_var = next(c for c in rendered if c.isalpha())
        assert first_var == "a"


def test_render_type_parenthesization():
    a, b = TyVar(0), TyVar(1)
    assert render_type(Arrow(a, Arrow(b, a))) == "a->b->a"
    assert render_type(Arrow(Arrow(a, b), a)) == "(a->b)->a"
    assert render_type(TyVar(30)) == "t30"


def test_census_small_sizes():
    # (typable, closed) pairs frozen from exhaustive inference
    expected = [
        (0, 0), (0, 0), (1, 1), (1, 1), (2, 3),
        (5, 6), (13, 17), (27, 41), (74, 116),
    ]
    assert [count_typable(n) for n in range(9)] == expected


def test_typable_subset_of_closed():
    for n in range(10):
        typ, clo = count_typable(n)
        assert 0 <= typ <= clo
