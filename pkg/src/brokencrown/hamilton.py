"""Exact Hamiltonian cycle enumeration by pruned depth-first search.

Directed cycles are counted up to rotation (the two directions of a ring
are distinct cycles); undirected cycles up to rotation and reflection.
The search always starts at vertex 1 and branches in ascending id order,
so repeated runs produce identical reports.

Vertex sets are kept as int bitmasks. Two prunings keep the generated
benchmark families tractable: every unvisited vertex must retain both a
usable way in and a usable way out, and a vertex whose only possible
predecessor is the current path head is taken as a forced move.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, replace
from typing import NamedTuple

from .errors import InvalidParameter, PropertyViolation
from .families import CrownAttachment, HubRange
from .graphs import DirectedGraph, UndirectedGraph

# Collected cycle sequences are capped to bound memory; counting continues.
DEFAULT_MAX_CYCLES = 10_000


@dataclass(frozen=True)
class CycleReport:
    """Result of one enumeration run.

    ``cycles`` is None when collection was not requested; ``truncated``
    means either the search was stopped at ``cap`` or some cycles were
    dropped once the collection limit was hit (the count keeps going).
    ``label_usage`` maps cycle index -> (incoming label, outgoing label)
    once a label analysis has been attached.
    """

    count: int
    cycles: tuple[tuple[int, ...], ...] | None
    truncated: bool
    label_usage: dict[int, tuple[int, int]] | None = None


class LabelAnalysis(NamedTuple):
    """Per-cycle hub labels plus the two checked properties."""

    pairs: tuple[tuple[int, int], ...]
    matched: bool  # every cycle enters and leaves on the same label
    distinct: bool  # no two cycles share a label

    @property
    def ok(self) -> bool:
        return self.matched and self.distinct


def _ensure_recursion_room(order: int) -> None:
    need = order + 128
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def count_hc_directed(
    g: DirectedGraph,
    cap: int | None = None,
    collect: bool = False,
    max_cycles: int = DEFAULT_MAX_CYCLES,
) -> CycleReport:
    """Count (and optionally collect) the directed Hamiltonian cycles of g.

    Cycles are reported as vertex tuples starting at vertex 1. With ``cap``
    the search stops after that many cycles and the report is marked
    truncated.
    """
    if g.order < 2:
        raise InvalidParameter("directed enumeration needs at least 2 vertices")
    _ensure_recursion_room(g.order)
    order = g.order
    out_mask = [0] * (order + 1)
    in_mask = [0] * (order + 1)
    for u, v in g.arcs:
        out_mask[u] |= 1 << v
        in_mask[v] |= 1 << u

    one = 1 << 1
    count = 0
    dropped = False
    stopped = False
    cycles: list[tuple[int, ...]] = []
    path = [1]

    def search(cur: int, unvisited: int) -> bool:
        nonlocal count, dropped
        if not unvisited:
            if out_mask[cur] & one:
                count += 1
                if collect:
                    if len(cycles) < max_cycles:
                        cycles.append(tuple(path))
                    else:
                        dropped = True
                if cap is not None and count >= cap:
                    return True
            return False
        if not in_mask[1] & unvisited:
            return False  # nothing left that could close the cycle
        cur_bit = 1 << cur
        forced = 0
        rem = unvisited
        while rem:
            bit = rem & -rem
            rem ^= bit
            u = bit.bit_length() - 1
            others = unvisited ^ bit
            if not in_mask[u] & (others | cur_bit):
                return False
            if not out_mask[u] & (others | one):
                return False
            if in_mask[u] & (others | cur_bit) == cur_bit:
                if forced:
                    return False  # two vertices both demand the next slot
                forced = bit
        moves = out_mask[cur] & unvisited
        if forced:
            moves &= forced
        while moves:
            bit = moves & -moves
            moves ^= bit
            v = bit.bit_length() - 1
            path.append(v)
            if search(v, unvisited ^ bit):
                return True
            path.pop()
        return False

    full = (1 << (order + 1)) - 2  # bits 1..order
    if search(1, full ^ one):
        stopped = True
    return CycleReport(
        count=count,
        cycles=tuple(cycles) if collect else None,
        truncated=stopped or dropped,
    )


def count_hc_undirected(
    g: UndirectedGraph,
    cap: int | None = None,
    collect: bool = False,
    max_cycles: int = DEFAULT_MAX_CYCLES,
) -> CycleReport:
    """Count undirected Hamiltonian cycles up to rotation and reflection.

    Each cycle through vertex 1 has two traversal directions; only the one
    whose second vertex is smaller than its last is emitted, which counts
    every cycle exactly once without deduplication.
    """
    if g.order < 3:
        raise InvalidParameter("undirected enumeration needs at least 3 vertices")
    _ensure_recursion_room(g.order)
    order = g.order
    adj_mask = [0] * (order + 1)
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u

    one = 1 << 1
    count = 0
    dropped = False
    stopped = False
    cycles: list[tuple[int, ...]] = []
    path = [1]

    def search(cur: int, unvisited: int) -> bool:
        nonlocal count, dropped
        if not unvisited:
            if adj_mask[cur] & one and path[1] < path[-1]:
                count += 1
                if collect:
                    if len(cycles) < max_cycles:
                        cycles.append(tuple(path))
                    else:
                        dropped = True
                if cap is not None and count >= cap:
                    return True
            return False
        if not adj_mask[1] & unvisited:
            return False
        cur_bit = 1 << cur
        forced = 0
        rem = unvisited
        while rem:
            bit = rem & -rem
            rem ^= bit
            u = bit.bit_length() - 1
            others = unvisited ^ bit
            avail = adj_mask[u] & (others | cur_bit | one)
            if avail.bit_count() < 2:
                return False  # cannot both enter and leave u
            if adj_mask[u] & (others | cur_bit) == cur_bit:
                if forced:
                    return False
                forced = bit
        moves = adj_mask[cur] & unvisited
        if forced:
            moves &= forced
        while moves:
            bit = moves & -moves
            moves ^= bit
            v = bit.bit_length() - 1
            path.append(v)
            if search(v, unvisited ^ bit):
                return True
            path.pop()
        return False

    full = (1 << (order + 1)) - 2
    if search(1, full ^ one):
        stopped = True
    return CycleReport(
        count=count,
        cycles=tuple(cycles) if collect else None,
        truncated=stopped or dropped,
    )


def analyze_labels(
    report: CycleReport, att: CrownAttachment, hub: HubRange
) -> LabelAnalysis:
    """Identify each cycle's hub entry and exit labels and check them.

    Every Hamiltonian cycle of a well-formed instance crosses the hub
    boundary exactly once in each direction; a second crossing means the
    construction is broken and raises PropertyViolation. The returned
    flags say whether every cycle used one label for both crossings and
    whether all cycles used different labels.
    """
    if report.cycles is None or report.truncated:
        raise InvalidParameter("label analysis needs a complete collected cycle set")
    hub_ids = set(hub.vertices)
    pairs: list[tuple[int, int]] = []
    for idx, cycle in enumerate(report.cycles):
        into_crown: list[int] = []
        into_hub: list[int] = []
        length = len(cycle)
        for p, u in enumerate(cycle):
            v = cycle[(p + 1) % length]
            if u in hub_ids and v not in hub_ids:
                into_crown.append(v)
            elif u not in hub_ids and v in hub_ids:
                into_hub.append(u)
        if len(into_crown) != 1 or len(into_hub) != 1:
            raise PropertyViolation(
                f"cycle {idx} crosses the hub boundary "
                f"{len(into_crown)} time(s) out and {len(into_hub)} time(s) in"
            )
        entry_vertex, exit_vertex = into_crown[0], into_hub[0]
        if entry_vertex not in att.entry_label or exit_vertex not in att.exit_label:
            raise PropertyViolation(
                f"cycle {idx} crosses the hub boundary at unlabelled vertices "
                f"({entry_vertex} in, {exit_vertex} out)"
            )
        pairs.append((att.entry_label[entry_vertex], att.exit_label[exit_vertex]))
    matched = all(i == j for i, j in pairs)
    used = [i for i, _ in pairs]
    distinct = len(set(used)) == len(used)
    return LabelAnalysis(tuple(pairs), matched, distinct)


def with_label_usage(report: CycleReport, analysis: LabelAnalysis) -> CycleReport:
    """Attach the analysed per-cycle label pairs to a report."""
    return replace(report, label_usage=dict(enumerate(analysis.pairs)))
