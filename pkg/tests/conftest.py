import hypothesis.strategies as st

from lambdaenum.terms import Abs, App, Idx


def term_strategy(max_index: int = 6):
    return st.recursive(
        st.integers(min_value=0, max_value=max_index).map(Idx),
        lambda inner: st.one_of(
            inner.map(Abs),
            st.tuples(inner, inner).map(lambda p: App(*p)),
        ),
        max_leaves=25,
    )
