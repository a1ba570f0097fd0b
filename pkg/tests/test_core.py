import pytest
from hypothesis import given

from sdegree import (
    Sign,
    SignedBipartiteGraph,
    SignedGraph,
    degree_vectors,
    flip_signs,
    is_connected,
    join_all_positive,
    signed_degree,
    signed_degree_sequences,
    signed_degree_set,
)

from .conftest import bipartite_graphs


def test_sign_flip_is_involution():
    assert Sign.POSITIVE.flipped is Sign.NEGATIVE
    assert Sign.NEGATIVE.flipped is Sign.POSITIVE
    for sign in Sign:
        assert sign.flipped.flipped is sign


def test_sign_str():
    assert str(Sign.POSITIVE) == "+"
    assert str(Sign.NEGATIVE) == "-"


def test_signed_graph_normalises_edge_keys():
    g = SignedGraph(3, {(2, 0): Sign.POSITIVE, (1, 2): Sign.NEGATIVE})
    assert g.edges == {(0, 2): Sign.POSITIVE, (1, 2): Sign.NEGATIVE}


@pytest.mark.parametrize(
    "n, edges",
    [
        (2, {(0, 0): Sign.POSITIVE}),  # loop
        (2, {(0, 2): Sign.POSITIVE}),  # out of range
        (2, {(0, 1): Sign.POSITIVE, (1, 0): Sign.NEGATIVE}),  # same pair twice
        (2, {(0, 1): "+"}),  # not a Sign
        (-1, {}),
    ],
)
def test_signed_graph_rejects_bad_input(n, edges):
    with pytest.raises(ValueError):
        SignedGraph(n, edges)


def test_signed_graph_equality_ignores_key_orientation():
    a = SignedGraph(3, {(0, 1): Sign.POSITIVE})
    b = SignedGraph(3, {(1, 0): Sign.POSITIVE})
    assert a == b
    assert a != SignedGraph(3, {(0, 1): Sign.NEGATIVE})
    assert a != SignedGraph(4, {(0, 1): Sign.POSITIVE})


@pytest.mark.parametrize(
    "p, q, edges, labels",
    [
        (1, 1, {(0, 1): Sign.POSITIVE}, {}),  # v out of range
        (1, 1, {(1, 0): Sign.POSITIVE}, {}),  # u out of range
        (1, 1, {(0, 0): 1}, {}),  # not a Sign
        (1, 1, {}, {("u", 1): "X_1"}),  # label names no vertex
        (1, 1, {}, {("w", 0): "X_1"}),  # unknown part
        (-1, 2, {}, {}),
    ],
)
def test_bipartite_rejects_bad_input(p, q, edges, labels):
    with pytest.raises(ValueError):
        SignedBipartiteGraph(p, q, edges, labels)


def test_bipartite_equality_ignores_labels():
    edges = {(0, 0): Sign.POSITIVE}
    assert SignedBipartiteGraph(1, 1, edges, {("u", 0): "X_1"}) == SignedBipartiteGraph(
        1, 1, edges
    )
    assert SignedBipartiteGraph(1, 1, edges) != SignedBipartiteGraph(1, 2, edges)
    assert SignedBipartiteGraph(1, 1, edges) != SignedBipartiteGraph(
        1, 1, {(0, 0): Sign.NEGATIVE}
    )


def test_bipartite_copies_constructor_dicts():
    edges = {(0, 0): Sign.POSITIVE}
    labels = {("u", 0): "X_1"}
    g = SignedBipartiteGraph(1, 1, edges, labels)
    edges[(0, 0)] = Sign.NEGATIVE
    labels[("u", 0)] = "other"
    assert g.edges[(0, 0)] is Sign.POSITIVE
    assert g.block_labels[("u", 0)] == "X_1"


def _square():
    # 2x2 square whose four vertices all sit at signed degree zero
    return SignedBipartiteGraph(
        2,
        2,
        {
            (0, 0): Sign.POSITIVE,
            (1, 1): Sign.POSITIVE,
            (0, 1): Sign.NEGATIVE,
            (1, 0): Sign.NEGATIVE,
        },
    )


def test_degree_vectors_by_index():
    g = SignedBipartiteGraph(
        2, 2, {(0, 0): Sign.POSITIVE, (0, 1): Sign.POSITIVE, (1, 0): Sign.NEGATIVE}
    )
    assert degree_vectors(g) == ([2, -1], [0, 1])


def test_signed_degree_general_graph():
    g = SignedGraph(3, {(0, 1): Sign.POSITIVE, (0, 2): Sign.NEGATIVE})
    assert [signed_degree(g, v) for v in range(3)] == [0, 1, -1]
    with pytest.raises(ValueError):
        signed_degree(g, 3)
    with pytest.raises(ValueError):
        signed_degree(g, ("u", 0))


def test_signed_degree_bipartite_vertices():
    g = SignedBipartiteGraph(2, 2, {(0, 0): Sign.POSITIVE, (1, 0): Sign.NEGATIVE})
    assert signed_degree(g, ("u", 0)) == 1
    assert signed_degree(g, ("u", 1)) == -1
    assert signed_degree(g, ("v", 0)) == 0
    assert signed_degree(g, ("v", 1)) == 0
    with pytest.raises(ValueError):
        signed_degree(g, ("v", 2))
    with pytest.raises(TypeError):
        signed_degree([1, 2], 0)


def test_signed_degree_set_both_kinds():
    assert signed_degree_set(_square()) == {0}
    g = SignedGraph(2, {(0, 1): Sign.NEGATIVE})
    assert signed_degree_set(g) == {-1}
    with pytest.raises(ValueError):
        signed_degree_set(SignedGraph(0))
    with pytest.raises(ValueError):
        signed_degree_set(SignedBipartiteGraph(0, 0))
    with pytest.raises(TypeError):
        signed_degree_set("nope")


def test_signed_degree_sequences_sorted_non_increasing():
    g = SignedBipartiteGraph(
        2, 2, {(0, 0): Sign.NEGATIVE, (1, 0): Sign.POSITIVE, (1, 1): Sign.POSITIVE}
    )
    assert signed_degree_sequences(g) == ((2, -1), (1, 0))
    with pytest.raises(ValueError):
        signed_degree_sequences(SignedBipartiteGraph(0, 2))


def test_is_connected_cases():
    assert is_connected(SignedGraph(1))
    assert not is_connected(SignedGraph(2))
    assert is_connected(SignedGraph(2, {(0, 1): Sign.NEGATIVE}))
    assert is_connected(_square())
    assert not is_connected(SignedBipartiteGraph(1, 1))
    with pytest.raises(ValueError):
        is_connected(SignedGraph(0))
    with pytest.raises(TypeError):
        is_connected(42)


def test_join_all_positive_adds_complete_join():
    g = SignedBipartiteGraph(2, 2)
    joined = join_all_positive(g, [0, 1], [1])
    assert joined.edges == {(0, 1): Sign.POSITIVE, (1, 1): Sign.POSITIVE}
    assert g.edges == {}  # original untouched


def test_join_all_positive_rejects_occupied_pair_and_bad_endpoint():
    g = SignedBipartiteGraph(2, 2, {(0, 1): Sign.NEGATIVE})
    with pytest.raises(ValueError):
        join_all_positive(g, [0], [1])
    with pytest.raises(ValueError):
        join_all_positive(g, [2], [0])


def test_flip_signs_negates_degrees():
    g = SignedBipartiteGraph(2, 2, {(0, 0): Sign.POSITIVE, (1, 0): Sign.NEGATIVE})
    du, dv = degree_vectors(g)
    fu, fv = degree_vectors(flip_signs(g))
    assert fu == [-x for x in du]
    assert fv == [-x for x in dv]
    h = SignedGraph(2, {(0, 1): Sign.POSITIVE})
    assert signed_degree(flip_signs(h), 0) == -1
    with pytest.raises(TypeError):
        flip_signs(object())


@given(bipartite_graphs(with_labels=True))
def test_flip_signs_is_involution(g):
    back = flip_signs(flip_signs(g))
    assert back == g
    assert back.block_labels == g.block_labels
