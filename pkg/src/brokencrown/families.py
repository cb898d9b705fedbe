"""Builders for the graph families shipped as benchmark instances.

The central family is the broken crown: a directed graph on 5n-9 vertices
whose Hamiltonian cycle count can be dialled to any k between 1 and n by
deleting hub arcs. Wheel graphs and generalized Petersen graphs GP(n,2)
are included as undirected fixtures with known cycle counts, used to
cross-check the enumeration oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import InvalidParameter
from .graphs import DirectedGraph, UndirectedGraph, remove_arcs, smooth_pair, smoothable

# Hub graphs up to this order get their unique-Hamiltonian-path invariant
# verified by exhaustive search on construction.
_HUB_CHECK_LIMIT = 12


class RemovalPolicy(enum.Enum):
    """Which hub arc(s) to delete for each eliminated cycle label."""

    OUTGOING_ONLY = "outgoing"
    INCOMING_ONLY = "incoming"
    BOTH = "both"

    @property
    def removes_outgoing(self) -> bool:
        return self in (RemovalPolicy.OUTGOING_ONLY, RemovalPolicy.BOTH)

    @property
    def removes_incoming(self) -> bool:
        return self in (RemovalPolicy.INCOMING_ONLY, RemovalPolicy.BOTH)


@dataclass(frozen=True)
class CrownAttachment:
    """Label <-> vertex bijections for a crown of parameter n.

    ``entry[i]`` is the vertex the hub arc labelled i points at (always a
    top vertex, id <= 2n-1); ``exit[i]`` is the vertex the arc labelled i
    leaves from. After smoothing, exit vertices are given in the smoothed
    graph's id space.
    """

    n: int
    entry: dict[int, int]
    exit: dict[int, int]

    def __post_init__(self):
        labels = set(range(1, self.n + 1))
        for name, mapping in (("entry", self.entry), ("exit", self.exit)):
            if set(mapping) != labels:
                raise InvalidParameter(f"{name} map must cover labels 1..{self.n}")
            if len(set(mapping.values())) != self.n:
                raise InvalidParameter(f"{name} map must be injective")
        if any(v > 2 * self.n - 1 for v in self.entry.values()):
            raise InvalidParameter("entry vertices must be top vertices (id <= 2n-1)")

    @cached_property
    def entry_label(self) -> dict[int, int]:
        return {v: i for i, v in self.entry.items()}

    @cached_property
    def exit_label(self) -> dict[int, int]:
        return {v: i for i, v in self.exit.items()}

    def renamed(self, renames: dict[int, int]) -> "CrownAttachment":
        return CrownAttachment(
            self.n,
            {i: renames[v] for i, v in self.entry.items()},
            {i: renames[v] for i, v in self.exit.items()},
        )


@dataclass(frozen=True)
class HubSpec:
    """A replacement hub: a directed graph with a unique Hamiltonian path.

    The path must run from ``start`` to ``finish``; entry arcs of the
    assembled graph leave ``finish`` and exit arcs land on ``start``. The
    invariant is verified by exhaustive search for hubs of order <= 12.
    """

    graph: DirectedGraph
    start: int
    finish: int

    def __post_init__(self):
        g = self.graph
        if not (1 <= self.start <= g.order and 1 <= self.finish <= g.order):
            raise InvalidParameter("hub start/finish outside vertex range")
        if g.order <= _HUB_CHECK_LIMIT:
            paths = _hamiltonian_paths(g)
            if len(paths) != 1 or paths[0][0] != self.start or paths[0][-1] != self.finish:
                raise InvalidParameter(
                    f"hub must contain exactly one Hamiltonian path from "
                    f"{self.start} to {self.finish}; found {len(paths)}"
                )


def _hamiltonian_paths(g: DirectedGraph) -> list[tuple[int, ...]]:
    """All directed Hamiltonian paths of g, exhaustively (small graphs only)."""
    if g.order == 1:
        return [(1,)]
    found = []

    def extend(path: list[int], seen: set[int]):
        if len(path) == g.order:
            found.append(tuple(path))
            return
        for v in g.out_neighbors(path[-1]):
            if v not in seen:
                path.append(v)
                seen.add(v)
                extend(path, seen)
                path.pop()
                seen.remove(v)

    for s in range(1, g.order + 1):
        extend([s], {s})
    return found


class HubRange(NamedTuple):
    """Ids occupied by the hub inside an assembled graph (lo..hi)."""

    lo: int
    hi: int
    start: int
    finish: int

    @property
    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)


@dataclass(frozen=True)
class BrokenCrownSpec:
    """Everything that determines one broken crown instance.

    ``removed_labels`` defaults to the n-k largest labels; ``hub_length``
    of 1 keeps the classic single hub vertex. k down to 1 is accepted: the
    construction stays well-defined below the usual k >= 4 regime.
    """

    n: int
    k: int
    policy: RemovalPolicy = RemovalPolicy.OUTGOING_ONLY
    removed_labels: frozenset[int] | None = None
    contract: bool = False
    hub_length: int = 1

    def __post_init__(self):
        if self.n < 4:
            raise InvalidParameter(f"n must be >= 4, got {self.n}")
        if not 1 <= self.k <= self.n:
            raise InvalidParameter(f"k must satisfy 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.hub_length < 1:
            raise InvalidParameter(f"hub_length must be >= 1, got {self.hub_length}")
        if self.removed_labels is None:
            labels = frozenset(range(self.k + 1, self.n + 1))
        else:
            labels = frozenset(int(i) for i in self.removed_labels)
            if not labels <= set(range(1, self.n + 1)):
                raise InvalidParameter("removed labels must lie in 1..n")
            if len(labels) != self.n - self.k:
                raise InvalidParameter(
                    f"need exactly n-k = {self.n - self.k} removed labels, got {len(labels)}"
                )
        object.__setattr__(self, "removed_labels", labels)


class Crown(NamedTuple):
    graph: DirectedGraph
    attachment: CrownAttachment


class BrokenCrown(NamedTuple):
    graph: DirectedGraph
    attachment: CrownAttachment
    hub: HubRange


def build_crown(n: int) -> Crown:
    """The crown on 5n-10 vertices: a bidirected ring plus one-way chords.

    Vertices 1..2n-1 are the top row, the rest the bottom row. The chords
    are laid out so that a Hamiltonian cycle of any host graph can thread
    the crown in exactly one way per attachment label: it must enter at
    entry(i) = 2i-1 and leave from exit(i).
    """
    if n < 4:
        raise InvalidParameter(f"crown parameter must be >= 4, got {n}")
    order = 5 * n - 10
    arcs: set[tuple[int, int]] = set()
    for i in range(1, order):
        arcs.add((i, i + 1))
        arcs.add((i + 1, i))
    arcs.add((1, order))
    arcs.add((order, 1))
    arcs.add((2 * n, 2 * n - 2))
    arcs.add((order, 2))
    for i in range(1, (n - 3) // 2 + 1):  # ceil((n-4)/2) chords, right half
        arcs.add((2 * n + 3 * i, 2 * n - 2 - 2 * i))
    for i in range(1, (n - 4) // 2 + 1):  # floor((n-4)/2) chords, left half
        arcs.add((order - 3 * i, 2 * i + 2))

    entry = {i: 2 * i - 1 for i in range(1, n + 1)}
    exit_ = {1: order, 2: 1, n - 1: 2 * n - 1, n: 2 * n}
    for i in range(1, (n - 4) // 2 + 1):
        exit_[i + 2] = order + 1 - 3 * i
    for i in range(1, (n - 3) // 2 + 1):
        exit_[n - 1 - i] = 2 * n - 1 + 3 * i

    return Crown(DirectedGraph(order, arcs), CrownAttachment(n, entry, exit_))


def build_path_hub(m: int) -> HubSpec:
    """A directed path hub on m vertices; m = 1 is the single hub vertex."""
    if m < 1:
        raise InvalidParameter(f"hub length must be >= 1, got {m}")
    arcs = {(i, i + 1) for i in range(1, m)}
    return HubSpec(DirectedGraph(m, arcs), start=1, finish=m)


def hub_range(crown_order: int, hub: HubSpec) -> HubRange:
    """Ids the hub occupies once renumbered behind the crown's vertices."""
    return HubRange(
        lo=crown_order + 1,
        hi=crown_order + hub.graph.order,
        start=crown_order + hub.start,
        finish=crown_order + hub.finish,
    )


def attach_hub(crown: DirectedGraph, att: CrownAttachment, hub: HubSpec) -> DirectedGraph:
    """Join a hub to a crown with the full set of labelled arcs.

    Hub vertices are renumbered to sit after the crown's so the crown ids
    are unchanged. For every label i, an arc runs from the hub's finish
    vertex to entry(i) and from exit(i) to the hub's start vertex; label
    removal is the caller's business.
    """
    base = crown.order
    arcs = set(crown.arcs)
    for u, v in hub.graph.arcs:
        arcs.add((u + base, v + base))
    hr = hub_range(base, hub)
    for i in range(1, att.n + 1):
        arcs.add((hr.finish, att.entry[i]))
        arcs.add((att.exit[i], hr.start))
    return DirectedGraph(base + hub.graph.order, arcs)


def build_broken_crown(spec: BrokenCrownSpec) -> BrokenCrown:
    """Assemble a broken crown instance with exactly spec.k Hamiltonian cycles.

    Starts from the crown plus hub with all 2n labelled arcs (one cycle per
    label), then deletes the arcs of the removed labels under the chosen
    policy. With ``contract`` set, each bottom exit vertex freed to degree 2
    by an outgoing removal is merged with its degree-2 ring neighbour;
    eligibility is decided by inspecting actual degrees, not by label
    arithmetic, so exits that keep a chord are skipped automatically.

    Returns the graph, the attachment maps in the final id space, and the
    hub's id range.
    """
    crown, att = build_crown(spec.n)
    hub = build_path_hub(spec.hub_length)
    g = attach_hub(crown, att, hub)
    hr = hub_range(crown.order, hub)

    doomed = []
    for i in sorted(spec.removed_labels):
        if spec.policy.removes_outgoing:
            doomed.append((att.exit[i], hr.start))
        if spec.policy.removes_incoming:
            doomed.append((hr.finish, att.entry[i]))
    g = remove_arcs(g, doomed)

    if spec.contract and spec.policy.removes_outgoing:
        top_limit = 2 * spec.n - 1  # bottom vertices keep ids > 2n-1 throughout
        exit_map = dict(att.exit)
        entry_map = dict(att.entry)
        start, finish, lo, hi = hr.start, hr.finish, hr.lo, hr.hi
        for i in sorted(spec.removed_labels):
            u = exit_map[i]
            if u <= top_limit:
                continue
            for w in g.neighbors(u):
                if w > top_limit and w not in range(lo, hi + 1) and smoothable(g, u, w):
                    g, renames = smooth_pair(g, u, w)
                    exit_map = {j: renames[v] for j, v in exit_map.items()}
                    entry_map = {j: renames[v] for j, v in entry_map.items()}
                    lo, hi = renames[lo], renames[hi]
                    start, finish = renames[start], renames[finish]
                    break
        att = CrownAttachment(spec.n, entry_map, exit_map)
        hr = HubRange(lo, hi, start, finish)

    return BrokenCrown(g, att, hr)


def build_wheel(n: int, kept_spokes: frozenset[int] | set[int] | None = None) -> UndirectedGraph:
    """Wheel on n vertices: an (n-1)-ring plus a centre joined to the rim.

    With all spokes present there are n-1 Hamiltonian cycles and every
    spoke lies on exactly two of them, so passing ``kept_spokes`` thins
    the cycle count; few-spoke wheels are near-trivial instances.
    """
    if n < 4:
        raise InvalidParameter(f"wheel parameter must be >= 4, got {n}")
    rim = range(1, n)
    if kept_spokes is None:
        spokes = set(rim)
    else:
        spokes = {int(s) for s in kept_spokes}
        if not spokes <= set(rim):
            raise InvalidParameter(f"kept spokes must be rim ids 1..{n - 1}")
    edges = {(i, i % (n - 1) + 1) for i in rim}
    edges |= {(i, n) for i in spokes}
    return UndirectedGraph(n, edges)


def build_gp2(n: int) -> UndirectedGraph:
    """Generalized Petersen graph GP(n,2): outer ring, spokes, step-2 inner ring.

    Outer vertices take ids 1..n, inner ids n+1..2n. The graph is
    3-regular; its Hamiltonian cycle count is 3 when n = 3 (mod 6) and
    n when n = 1 (mod 6), which makes these standard oracle fixtures.
    """
    if n < 5:
        raise InvalidParameter(f"GP(n,2) needs n >= 5, got {n}")
    edges = set()
    for i in range(n):
        edges.add((i + 1, (i + 1) % n + 1))
        edges.add((i + 1, n + i + 1))
        edges.add((n + i + 1, n + (i + 2) % n + 1))
    return UndirectedGraph(2 * n, edges)
