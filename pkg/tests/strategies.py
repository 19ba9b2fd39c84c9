"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from finspace.poset import from_covers


@st.composite
def posets(draw, max_size=9, max_height=3):
    n = draw(st.integers(1, max_size))
    levels = draw(st.lists(st.integers(0, max_height), min_size=n, max_size=n))
    pairs = []
    for i in range(n):
        for j in range(n):
            if levels[i] < levels[j] and draw(st.booleans()):
                pairs.append((i, j))
    return from_covers(list(range(n)), pairs)


@st.composite
def connected_posets(draw, max_size=9, max_height=3):
    X = draw(posets(max_size, max_height))
    comps = X.components()
    return X.induced(set(max(comps, key=len)))
