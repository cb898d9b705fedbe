"""Directed-to-undirected reduction by splitting each vertex into a triple.

Vertex j becomes an in-node, a mid-node, and an out-node chained by two
edges; each arc (a, b) becomes an edge from a's out-node to b's in-node.
Hamiltonian cycles correspond one-to-one across the reduction, and
``lift_cycle`` recovers the directed cycle from an undirected one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidParameter, MalformedCycle
from .graphs import DirectedGraph, UndirectedGraph


@dataclass(frozen=True)
class KarpMapping:
    """Record of the triple split: original id j -> (in, mid, out) node ids.

    The layout is fixed at (3j-2, 3j-1, 3j), so the mapping is
    reconstructible from the original order alone; it is materialised for
    format consumers.
    """

    original_order: int
    triple: dict[int, tuple[int, int, int]]

    @staticmethod
    def for_order(order: int) -> "KarpMapping":
        return KarpMapping(
            order, {j: (3 * j - 2, 3 * j - 1, 3 * j) for j in range(1, order + 1)}
        )


def to_undirected_karp(g: DirectedGraph) -> tuple[UndirectedGraph, KarpMapping]:
    """Split every vertex into an in/mid/out triple; arcs become cross edges.

    The image has 3|V| vertices and 2|V| + |arcs| edges. Every mid-node has
    degree exactly 2, which forces each triple to be traversed together and
    gives the cycle-set bijection.
    """
    if g.order < 2:
        raise InvalidParameter("conversion needs at least 2 vertices")
    mapping = KarpMapping.for_order(g.order)
    edges: set[tuple[int, int]] = set()
    for j in range(1, g.order + 1):
        i_node, m_node, o_node = mapping.triple[j]
        edges.add((i_node, m_node))
        edges.add((m_node, o_node))
    for a, b in g.arcs:
        edges.add((3 * a, 3 * b - 2))  # out-node of a meets in-node of b
    return UndirectedGraph(3 * g.order, edges), mapping


def _decompose(seq: Sequence[int]) -> list[int] | None:
    """Read consecutive (in, mid, out) triples; None if the layout breaks."""
    lifted = []
    for p in range(0, len(seq), 3):
        a, b, c = seq[p], seq[p + 1], seq[p + 2]
        if a % 3 == 1 and b == a + 1 and c == a + 2:
            lifted.append((a + 2) // 3)
        else:
            return None
    return lifted


def lift_cycle(mapping: KarpMapping, cycle: Sequence[int]) -> tuple[int, ...]:
    """Collapse an undirected Hamiltonian cycle of the image back to arcs.

    Accepts the cycle in either traversal direction and any rotation. The
    result follows the original arc directions and is rotated so the
    smallest id comes first. Raises MalformedCycle if the sequence is not a
    Hamiltonian cycle of a triple-split image.
    """
    n = mapping.original_order
    seq = [int(v) for v in cycle]
    if len(seq) != 3 * n or set(seq) != set(range(1, 3 * n + 1)):
        raise MalformedCycle(
            f"expected a permutation of 1..{3 * n}, got {len(seq)} vertices"
        )
    for direction in (seq, seq[::-1]):
        for offset in range(3):
            rotated = direction[offset:] + direction[:offset]
            lifted = _decompose(rotated)
            if lifted is not None:
                low = lifted.index(min(lifted))
                return tuple(lifted[low:] + lifted[:low])
    raise MalformedCycle("sequence does not decompose into in/mid/out triples")
