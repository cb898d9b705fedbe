"""Immutable simple-graph value types and the mutation primitives built on them.

Vertices are 1-based ids ``1..order`` in every interface. All operations
return new graph values; nothing is mutated in place, so graphs can be
shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import InvalidParameter, MissingArc, NotContractible

Arc = tuple[int, int]
Edge = tuple[int, int]


def _check_endpoint(v: int, order: int, kind: str) -> None:
    if not 1 <= v <= order:
        raise InvalidParameter(f"{kind} endpoint {v} outside 1..{order}")


@dataclass(frozen=True)
class DirectedGraph:
    """A simple directed graph: no self-loops, no parallel arcs.

    ``arcs`` is normalised to a frozenset of ordered pairs, so two graphs
    compare equal iff they have the same order and the same arc set.
    """

    order: int
    arcs: frozenset[Arc]

    def __init__(self, order: int, arcs: Iterable[Iterable[int]] = ()):
        if order < 1:
            raise InvalidParameter(f"order must be positive, got {order}")
        arc_set = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arc_set:
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            _check_endpoint(u, order, "arc")
            _check_endpoint(v, order, "arc")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "arcs", arc_set)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def _out(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.order + 1)}
        for u, v in self.arcs:
            adj[u].append(v)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @cached_property
    def _in(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.order + 1)}
        for u, v in self.arcs:
            adj[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        _check_endpoint(v, self.order, "query")
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        _check_endpoint(v, self.order, "query")
        return self._in[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Distinct vertices joined to v by an arc in either direction."""
        _check_endpoint(v, self.order, "query")
        return tuple(sorted(set(self._out[v]) | set(self._in[v])))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs


@dataclass(frozen=True)
class UndirectedGraph:
    """A simple undirected graph; edges are stored as (min, max) pairs."""

    order: int
    edges: frozenset[Edge]

    def __init__(self, order: int, edges: Iterable[Iterable[int]] = ()):
        if order < 1:
            raise InvalidParameter(f"order must be positive, got {order}")
        edge_set = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            _check_endpoint(u, order, "edge")
            _check_endpoint(v, order, "edge")
            edge_set.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(edge_set))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _adj(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.order + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_endpoint(v, self.order, "query")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges


class SmoothResult(NamedTuple):
    graph: DirectedGraph
    renames: dict[int, int]


def remove_arcs(g: DirectedGraph, arcs: Iterable[Arc]) -> DirectedGraph:
    """Return g minus the given arcs; order is unchanged.

    Raises MissingArc if any listed arc is absent, since that signals a
    construction bug in the caller rather than a no-op.
    """
    doomed = {(int(u), int(v)) for u, v in arcs}
    absent = doomed - g.arcs
    if absent:
        raise MissingArc(f"arcs not present: {sorted(absent)}")
    return DirectedGraph(g.order, g.arcs - doomed)


def underlying_degree(g: DirectedGraph, v: int) -> int:
    """Number of distinct vertices adjacent to v, ignoring arc direction."""
    return len(g.neighbors(v))


def underlying_graph(g: DirectedGraph) -> UndirectedGraph:
    """Collapse each arc to an undirected edge (orientation-blind image)."""
    return UndirectedGraph(g.order, g.arcs)


def smoothable(g: DirectedGraph, u: int, w: int) -> bool:
    """True iff (u, w) satisfies every smooth_pair precondition."""
    if u == w or g.order < 4:
        return False
    if not (1 <= u <= g.order and 1 <= w <= g.order):
        return False
    if (u, w) not in g.arcs or (w, u) not in g.arcs:
        return False
    return underlying_degree(g, u) == 2 and underlying_degree(g, w) == 2


def smooth_pair(g: DirectedGraph, u: int, w: int) -> SmoothResult:
    """Merge two mutually linked degree-2 vertices into one.

    Both vertices must have underlying degree exactly 2 and be joined by
    arcs in both directions; every Hamiltonian cycle then traverses them
    consecutively, so the merge preserves the cycle count. The vertex with
    the larger id is dropped, ids above it shift down by one, and the map
    old id -> new id is returned alongside the new graph (the dropped id
    maps to the merged vertex).
    """
    if not smoothable(g, u, w):
        raise NotContractible(
            f"({u}, {w}) is not a mutually linked degree-2 pair in a graph of order >= 4"
        )
    keep, drop = min(u, w), max(u, w)

    def newid(v: int) -> int:
        if v == drop:
            v = keep
        return v - 1 if v > drop else v

    arcs = set()
    for a, b in g.arcs:
        if {a, b} == {u, w}:
            continue
        # redirect the dropped vertex's external arcs onto the kept one
        na, nb = newid(a), newid(b)
        arcs.add((na, nb))
    renames = {v: newid(v) for v in range(1, g.order + 1)}
    return SmoothResult(DirectedGraph(g.order - 1, arcs), renames)
