"""Shared test helpers: brute-force censuses and graph strategies."""

import itertools
from functools import lru_cache

from hypothesis import strategies as st

from sdegree import Sign, SignedBipartiteGraph


@lru_cache(maxsize=None)
def unsigned_bipartite_census(p: int, q: int) -> frozenset:
    """Every (du, dv) degree pair of an unsigned bipartite graph on parts of
    size p and q, both sides sorted non-increasing."""
    slots = [(u, v) for u in range(p) for v in range(q)]
    seen = set()
    for choice in itertools.product((0, 1), repeat=len(slots)):
        du = [0] * p
        dv = [0] * q
        for (u, v), bit in zip(slots, choice):
            du[u] += bit
            dv[v] += bit
        seen.add((tuple(sorted(du, reverse=True)), tuple(sorted(dv, reverse=True))))
    return frozenset(seen)


_TAGS = ("X_1", "X_2'", "Y_3", "x_1", "y_2", "blk")


@st.composite
def bipartite_graphs(draw, max_side: int = 5, with_labels: bool = False):
    p = draw(st.integers(1, max_side))
    q = draw(st.integers(1, max_side))
    edges = draw(
        st.dictionaries(
            st.tuples(st.integers(0, p - 1), st.integers(0, q - 1)),
            st.sampled_from((Sign.POSITIVE, Sign.NEGATIVE)),
            max_size=p * q,
        )
    )
    labels = {}
    if with_labels:
        labels = draw(
            st.dictionaries(
                st.one_of(
                    st.tuples(st.just("u"), st.integers(0, p - 1)),
                    st.tuples(st.just("v"), st.integers(0, q - 1)),
                ),
                st.sampled_from(_TAGS),
                max_size=4,
            )
        )
    return SignedBipartiteGraph(p, q, edges, labels)
