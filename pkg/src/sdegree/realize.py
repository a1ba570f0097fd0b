"""Constructions that realize a prescribed signed degree set as a connected
signed bipartite graph.

Positive sets use an all-positive block construction; negative sets mirror
it with every sign flipped; {0} is a 2x2 square with alternating signs.
Every other mixture is glued from those pieces with degree-neutral edges:
each touched vertex gains one positive and one negative edge, so existing
signed degrees never move.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Iterable
from dataclasses import dataclass

from .core import (
    Sign,
    SignedBipartiteGraph,
    flip_signs,
    is_connected,
    join_all_positive,
    signed_degree_sequences,
    signed_degree_set,
)

__all__ = [
    "RealizationReport",
    "realize_positive_set",
    "realize_negative_set",
    "realize_zero_set",
    "attach_zero_gadget",
    "bridge_mixed",
    "bridge_mixed_zero",
    "realize_set",
]


@dataclass
class RealizationReport:
    """A constructed graph plus the construction case that produced it and
    the sizes of its building blocks."""

    graph: SignedBipartiteGraph
    case_used: str
    block_sizes: list[tuple[str, int]]


_GADGET_BLOCKS = [("x_1", 1), ("x_2", 1), ("y_1", 1), ("y_2", 1)]


def _validated_set(
    s: Iterable[int], *, lo: int | None = None, hi: int | None = None, kind: str = "degree"
) -> frozenset[int]:
    elems = frozenset(int(x) for x in s)
    if not elems:
        raise ValueError(f"{kind} set must be nonempty")
    if lo is not None and min(elems) < lo:
        raise ValueError(f"{kind} set requires elements >= {lo}, got {sorted(elems)}")
    if hi is not None and max(elems) > hi:
        raise ValueError(f"{kind} set requires elements <= {hi}, got {sorted(elems)}")
    return elems


def _tagged(tag: str, sizes: list[tuple[str, int]]) -> list[tuple[str, int]]:
    return [(f"{tag}.{name}", size) for name, size in sizes]


def _copy(g: SignedBipartiteGraph) -> SignedBipartiteGraph:
    return dataclasses.replace(g)


def realize_positive_set(s: Iterable[int]) -> RealizationReport:
    """Connected all-positive graph whose distinct signed degrees are exactly s.

    For targets s1 < ... < sn, block X_i/Y_i has size s_i - s_(i-1) and block
    X_i'/Y_i' has size s_(i-1); complete positive joins run X_i to Y_j for
    i >= j, X_i' to Y_i, and X_i' to Y_i'.  Every x in X_i or X_i' lands on
    degree s_i, every y in Y_i on s_n, every y in Y_i' on s_(i-1), and each
    part ends up with sum(s) vertices.
    """
    elems = _validated_set(s, lo=1, kind="positive")
    targets = sorted(elems)
    n = len(targets)
    sizes = [targets[0]] + [targets[i] - targets[i - 1] for i in range(1, n)]
    prefixes = [0] * (n + 1)
    for i, d in enumerate(sizes):
        prefixes[i + 1] = prefixes[i] + d  # prefixes[i] == targets[i-1]

    u_blocks: dict[str, range] = {}
    v_blocks: dict[str, range] = {}
    labels: dict[tuple[str, int], str] = {}
    block_sizes: list[tuple[str, int]] = []

    def place(part: str, blocks: dict[str, range], name: str, size: int, start: int) -> int:
        blocks[name] = range(start, start + size)
        for i in range(start, start + size):
            labels[(part, i)] = name
        block_sizes.append((name, size))
        return start + size

    cu = place("u", u_blocks, "X_1", sizes[0], 0)
    cv = place("v", v_blocks, "Y_1", sizes[0], 0)
    for i in range(2, n + 1):
        cu = place("u", u_blocks, f"X_{i}", sizes[i - 1], cu)
        cu = place("u", u_blocks, f"X_{i}'", prefixes[i - 1], cu)
        cv = place("v", v_blocks, f"Y_{i}", sizes[i - 1], cv)
        cv = place("v", v_blocks, f"Y_{i}'", prefixes[i - 1], cv)

    g = SignedBipartiteGraph(cu, cv, {}, labels)
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            g = join_all_positive(g, u_blocks[f"X_{i}"], v_blocks[f"Y_{j}"])
    for i in range(2, n + 1):
        g = join_all_positive(g, u_blocks[f"X_{i}'"], v_blocks[f"Y_{i}"])
        g = join_all_positive(g, u_blocks[f"X_{i}'"], v_blocks[f"Y_{i}'"])

    assert signed_degree_set(g) == elems and is_connected(g)
    return RealizationReport(g, "positive", block_sizes)


def realize_negative_set(s: Iterable[int]) -> RealizationReport:
    """Mirror construction: realize the negated set all-positive, then flip
    every edge sign, which negates every signed degree."""
    elems = _validated_set(s, hi=-1, kind="negative")
    mirrored = realize_positive_set({-x for x in elems})
    return RealizationReport(flip_signs(mirrored.graph), "negative", mirrored.block_sizes)


def realize_zero_set() -> RealizationReport:
    """The 2x2 square whose four vertices all have signed degree zero: one
    positive and one negative edge at every vertex."""
    edges = {
        (0, 0): Sign.POSITIVE,
        (1, 1): Sign.POSITIVE,
        (0, 1): Sign.NEGATIVE,
        (1, 0): Sign.NEGATIVE,
    }
    g = SignedBipartiteGraph(2, 2, edges)
    return RealizationReport(g, "zero_only", [("U", 2), ("V", 2)])


def attach_zero_gadget(g: SignedBipartiteGraph, u1: int, v1: int) -> SignedBipartiteGraph:
    """Extend a connected graph with vertices x1, x2 (U side) and y1, y2
    (V side), all four at signed degree zero, moving no existing degree.

    New edges: positive u1-y1, x1-v1, x2-y2 and negative u1-y2, x1-y1,
    x2-v1; each touched vertex gains one edge of each sign.  The new
    vertices take the next indices after the existing ones.
    """
    if not 0 <= u1 < g.p or not 0 <= v1 < g.q:
        raise ValueError(f"anchor ({u1}, {v1}) out of range for p={g.p}, q={g.q}")
    if not is_connected(g):
        raise ValueError("base graph must be connected")
    x1, x2 = g.p, g.p + 1
    y1, y2 = g.q, g.q + 1
    edges = dict(g.edges)
    edges[(u1, y1)] = Sign.POSITIVE
    edges[(x1, v1)] = Sign.POSITIVE
    edges[(x2, y2)] = Sign.POSITIVE
    edges[(u1, y2)] = Sign.NEGATIVE
    edges[(x1, y1)] = Sign.NEGATIVE
    edges[(x2, v1)] = Sign.NEGATIVE
    labels = dict(g.block_labels)
    labels[("u", x1)] = "x_1"
    labels[("u", x2)] = "x_2"
    labels[("v", y1)] = "y_1"
    labels[("v", y2)] = "y_2"
    return SignedBipartiteGraph(g.p + 2, g.q + 2, edges, labels)


def _concat(
    *graphs: SignedBipartiteGraph,
) -> tuple[SignedBipartiteGraph, list[int], list[int]]:
    """Disjoint union; parts are concatenated in argument order.  Returns the
    union plus the U and V index offsets of every piece."""
    edges: dict[tuple[int, int], Sign] = {}
    labels: dict[tuple[str, int], str] = {}
    u_offsets: list[int] = []
    v_offsets: list[int] = []
    p = q = 0
    for g in graphs:
        u_offsets.append(p)
        v_offsets.append(q)
        for (u, v), sign in g.edges.items():
            edges[(u + p, v + q)] = sign
        for (part, idx), tag in g.block_labels.items():
            labels[(part, idx + (p if part == "u" else q))] = tag
        p += g.p
        q += g.q
    return SignedBipartiteGraph(p, q, edges, labels), u_offsets, v_offsets


def bridge_mixed(
    g1: SignedBipartiteGraph,
    g1_copy: SignedBipartiteGraph,
    g2: SignedBipartiteGraph,
    g2_copy: SignedBipartiteGraph,
) -> SignedBipartiteGraph:
    """Disjoint union of four connected graphs (concatenated in argument
    order) plus four degree-neutral bridge edges that connect the result.

    The bridge runs between the first u-vertex of g1 and of g1_copy and the
    first v-vertex of g2 and of g2_copy: positive u1-v2', u1'-v2 and negative
    u1-v2, u1'-v2'.  Every bridge endpoint gains one edge of each sign.
    Each copy must mirror its original (part sizes and degree sequences).
    """
    pieces = (g1, g1_copy, g2, g2_copy)
    for g in pieces:
        if not is_connected(g):
            raise ValueError("all four pieces must be connected")
    for original, copy in ((g1, g1_copy), (g2, g2_copy)):
        if (original.p, original.q) != (copy.p, copy.q) or signed_degree_sequences(
            original
        ) != signed_degree_sequences(copy):
            raise ValueError("each copy must mirror its original (part sizes and degrees)")
    merged, u_off, v_off = _concat(*pieces)
    u1, u1c = u_off[0], u_off[1]
    v2, v2c = v_off[2], v_off[3]
    edges = dict(merged.edges)
    edges[(u1, v2c)] = Sign.POSITIVE
    edges[(u1c, v2)] = Sign.POSITIVE
    edges[(u1, v2)] = Sign.NEGATIVE
    edges[(u1c, v2c)] = Sign.NEGATIVE
    return SignedBipartiteGraph(merged.p, merged.q, edges, merged.block_labels)


def bridge_mixed_zero(
    g1: SignedBipartiteGraph, g2: SignedBipartiteGraph
) -> SignedBipartiteGraph:
    """Disjoint union of two connected graphs plus fresh vertices x (U side)
    and y (V side), joined degree-neutrally; x and y sit at signed degree
    zero and the whole graph comes out connected.

    New edges: positive u1-v2, u2-y, x-v1 and negative u1-y, u2-v1, x-v2,
    where u_i, v_i are the first vertices of each part of g_i.
    """
    for g in (g1, g2):
        if g.p == 0 or g.q == 0:
            raise ValueError("both parts of each piece must be nonempty")
        if not is_connected(g):
            raise ValueError("both pieces must be connected")
    merged, u_off, v_off = _concat(g1, g2)
    x, y = merged.p, merged.q
    u1, v1 = u_off[0], v_off[0]
    u2, v2 = u_off[1], v_off[1]
    edges = dict(merged.edges)
    edges[(u1, v2)] = Sign.POSITIVE
    edges[(u2, y)] = Sign.POSITIVE
    edges[(x, v1)] = Sign.POSITIVE
    edges[(u1, y)] = Sign.NEGATIVE
    edges[(u2, v1)] = Sign.NEGATIVE
    edges[(x, v2)] = Sign.NEGATIVE
    labels = dict(merged.block_labels)
    labels[("u", x)] = "x"
    labels[("v", y)] = "y"
    return SignedBipartiteGraph(merged.p + 1, merged.q + 1, edges, labels)


def realize_set(s: Iterable[int]) -> RealizationReport:
    """Build a connected signed bipartite graph whose set of distinct signed
    degrees is exactly s, dispatching on the sign pattern of s."""
    elems = _validated_set(s)
    positives = frozenset(x for x in elems if x > 0)
    negatives = frozenset(x for x in elems if x < 0)
    has_zero = 0 in elems

    if positives and not negatives and not has_zero:
        report = realize_positive_set(positives)
    elif negatives and not positives and not has_zero:
        report = realize_negative_set(negatives)
    elif has_zero and not positives and not negatives:
        report = realize_zero_set()
    elif positives and has_zero and not negatives:
        base = realize_positive_set(positives)
        graph = attach_zero_gadget(base.graph, 0, 0)
        report = RealizationReport(graph, "nonneg_with_zero", base.block_sizes + _GADGET_BLOCKS)
    elif negatives and has_zero and not positives:
        # full sign mirror of the non-negative case, gadget included
        mirrored = realize_positive_set({-x for x in negatives})
        graph = flip_signs(attach_zero_gadget(mirrored.graph, 0, 0))
        report = RealizationReport(
            graph, "nonpos_with_zero", mirrored.block_sizes + _GADGET_BLOCKS
        )
    elif not has_zero:
        rep1 = realize_positive_set(positives)
        rep2 = realize_negative_set(negatives)
        graph = bridge_mixed(rep1.graph, _copy(rep1.graph), rep2.graph, _copy(rep2.graph))
        report = RealizationReport(
            graph,
            "mixed_nonzero",
            _tagged("G1", rep1.block_sizes)
            + _tagged("G1'", rep1.block_sizes)
            + _tagged("G2", rep2.block_sizes)
            + _tagged("G2'", rep2.block_sizes),
        )
    else:
        rep1 = realize_positive_set(positives)
        rep2 = realize_negative_set(negatives)
        graph = bridge_mixed_zero(rep1.graph, rep2.graph)
        report = RealizationReport(
            graph,
            "mixed_with_zero",
            _tagged("G1", rep1.block_sizes) + _tagged("G2", rep2.block_sizes)
            + [("x", 1), ("y", 1)],
        )

    assert signed_degree_set(report.graph) == elems
    assert is_connected(report.graph)
    return report
