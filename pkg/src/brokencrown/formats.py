"""Solver-ready text formats and their parsers.

Two dialects are emitted, both deterministic byte streams (LF endings,
edges sorted ascending):

* TSPLIB HCP for undirected instances::

      NAME : <name>
      COMMENT : family=<family> [n=..] [k=..] [policy=..] [labels=..]
      TYPE : HCP
      DIMENSION : <order>
      EDGE_DATA_FORMAT : EDGE_LIST
      EDGE_DATA_SECTION
      <u> <v>          (one line per edge, u < v)
      -1
      EOF

* an arc-list dialect for directed instances::

      p dhc <order> <arc count>
      c <key>=<value>  (metadata, same keys as above plus name)
      a <u> <v>        (one line per arc)

``parse`` auto-detects the dialect and reconstructs the graph plus
whatever metadata the comments carry.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DimensionMismatch, InvalidParameter, ParseError
from .families import RemovalPolicy
from .graphs import DirectedGraph, UndirectedGraph


class Family(enum.Enum):
    CROWN = "crown"
    BROKEN_CROWN = "broken_crown"
    WHEEL = "wheel"
    GP2 = "gp2"
    CONVERTED = "converted"
    CUSTOM = "custom"


# which optional fields each family may carry
_N_FAMILIES = {Family.CROWN, Family.BROKEN_CROWN, Family.WHEEL, Family.GP2, Family.CONVERTED}
_K_FAMILIES = {Family.BROKEN_CROWN, Family.CONVERTED}


@dataclass(frozen=True)
class InstanceMetadata:
    """Descriptive fields carried in instance file comments."""

    name: str
    family: Family
    n: int | None = None
    k: int | None = None
    policy: RemovalPolicy | None = None
    removed_labels: frozenset[int] | None = None
    directed: bool = False

    def __post_init__(self):
        if self.removed_labels is not None:
            labels = frozenset(int(i) for i in self.removed_labels)
            object.__setattr__(self, "removed_labels", labels or None)
        if self.n is not None and self.family not in _N_FAMILIES:
            raise InvalidParameter(f"n does not apply to family {self.family.value}")
        for fld in ("k", "policy", "removed_labels"):
            if getattr(self, fld) is not None and self.family not in _K_FAMILIES:
                raise InvalidParameter(
                    f"{fld} does not apply to family {self.family.value}"
                )

    def comment_tokens(self) -> list[str]:
        tokens = [f"family={self.family.value}"]
        if self.n is not None:
            tokens.append(f"n={self.n}")
        if self.k is not None:
            tokens.append(f"k={self.k}")
        if self.policy is not None:
            tokens.append(f"policy={self.policy.value}")
        if self.removed_labels:
            tokens.append("labels=" + ",".join(str(i) for i in sorted(self.removed_labels)))
        return tokens


class ParsedInstance(NamedTuple):
    graph: DirectedGraph | UndirectedGraph
    meta: InstanceMetadata


def write_hcp_tsplib(g: UndirectedGraph, meta: InstanceMetadata) -> str:
    """Serialize an undirected instance in the TSPLIB HCP edge-list dialect."""
    if not isinstance(g, UndirectedGraph):
        raise InvalidParameter("TSPLIB HCP output is for undirected graphs")
    lines = [
        f"NAME : {meta.name}",
        f"COMMENT : {' '.join(meta.comment_tokens())}",
        "TYPE : HCP",
        f"DIMENSION : {g.order}",
        "EDGE_DATA_FORMAT : EDGE_LIST",
        "EDGE_DATA_SECTION",
    ]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    lines.append("-1")
    lines.append("EOF")
    return "\n".join(lines) + "\n"


def write_directed_arclist(g: DirectedGraph, meta: InstanceMetadata) -> str:
    """Serialize a directed instance in the ``p dhc`` arc-list dialect."""
    if not isinstance(g, DirectedGraph):
        raise InvalidParameter("arc-list output is for directed graphs")
    lines = [f"p dhc {g.order} {g.arc_count}", f"c name={meta.name}"]
    lines.extend(f"c {token}" for token in meta.comment_tokens())
    lines.extend(f"a {u} {v}" for u, v in sorted(g.arcs))
    return "\n".join(lines) + "\n"


def graph_to_json(g: DirectedGraph | UndirectedGraph, meta: InstanceMetadata) -> str:
    """JSON form for programmatic consumers; not a stable archival format."""
    directed = isinstance(g, DirectedGraph)
    payload: dict = {"directed": directed, "order": g.order}
    if directed:
        payload["arcs"] = [list(a) for a in sorted(g.arcs)]
    else:
        payload["edges"] = [list(e) for e in sorted(g.edges)]
    meta_obj: dict = {"name": meta.name, "family": meta.family.value}
    if meta.n is not None:
        meta_obj["n"] = meta.n
    if meta.k is not None:
        meta_obj["k"] = meta.k
    if meta.policy is not None:
        meta_obj["policy"] = meta.policy.value
    if meta.removed_labels:
        meta_obj["removed_labels"] = sorted(meta.removed_labels)
    meta_obj["directed"] = meta.directed
    payload["meta"] = meta_obj
    return json.dumps(payload)


def _meta_from_tokens(
    tokens: list[str], name: str, directed: bool, line_no: int
) -> InstanceMetadata:
    fields: dict = {}
    for token in tokens:
        if "=" not in token:
            continue  # free-text comment material
        key, _, value = token.partition("=")
        try:
            if key == "family":
                fields["family"] = Family(value)
            elif key in ("n", "k"):
                fields[key] = int(value)
            elif key == "policy":
                fields["policy"] = RemovalPolicy(value)
            elif key == "labels":
                fields["removed_labels"] = frozenset(
                    int(part) for part in value.split(",") if part
                )
            elif key == "name":
                name = value
        except (ValueError, InvalidParameter) as exc:
            raise ParseError(f"bad metadata token {token!r}: {exc}", line_no) from None
    family = fields.pop("family", Family.CUSTOM)
    try:
        return InstanceMetadata(name=name, family=family, directed=directed, **fields)
    except InvalidParameter as exc:
        raise ParseError(f"inconsistent metadata: {exc}", line_no) from None


def _parse_vertex(token: str, order: int, line_no: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise ParseError(f"expected a vertex id, got {token!r}", line_no) from None
    if v < 1:
        raise ParseError(f"vertex ids are 1-based, got {v}", line_no)
    if v > order:
        raise DimensionMismatch(f"vertex {v} exceeds declared dimension {order}", line_no)
    return v


def _parse_tsplib(lines: list[str]) -> ParsedInstance:
    name = ""
    comment_tokens: list[str] = []
    comment_line = 0
    dimension: int | None = None
    idx = 0
    in_section = False
    while idx < len(lines):
        line_no = idx + 1
        line = lines[idx].strip()
        idx += 1
        if not line:
            continue
        if line == "EDGE_DATA_SECTION":
            in_section = True
            break
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'KEY : value', got {line!r}", line_no)
        key, value = key.strip(), value.strip()
        if key == "NAME":
            name = value
        elif key == "COMMENT":
            comment_tokens = value.split()
            comment_line = line_no
        elif key == "TYPE":
            if value != "HCP":
                raise ParseError(f"unsupported TYPE {value!r}, expected HCP", line_no)
        elif key == "DIMENSION":
            try:
                dimension = int(value)
            except ValueError:
                raise ParseError(f"bad DIMENSION {value!r}", line_no) from None
            if dimension < 1:
                raise ParseError(f"DIMENSION must be positive, got {dimension}", line_no)
        elif key == "EDGE_DATA_FORMAT":
            if value != "EDGE_LIST":
                raise ParseError(f"unsupported EDGE_DATA_FORMAT {value!r}", line_no)
        else:
            raise ParseError(f"unknown keyword {key!r}", line_no)
    if not in_section:
        raise ParseError("missing EDGE_DATA_SECTION", len(lines))
    if dimension is None:
        raise ParseError("missing DIMENSION", len(lines))

    edges: set[tuple[int, int]] = set()
    terminated = False
    while idx < len(lines):
        line_no = idx + 1
        line = lines[idx].strip()
        idx += 1
        if not line:
            continue
        if line == "-1":
            terminated = True
            break
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"edge lines carry two vertex ids, got {line!r}", line_no)
        u = _parse_vertex(parts[0], dimension, line_no)
        v = _parse_vertex(parts[1], dimension, line_no)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line_no)
        edge = (u, v) if u < v else (v, u)
        if edge in edges:
            raise ParseError(f"duplicate edge {edge}", line_no)
        edges.add(edge)
    if not terminated:
        raise ParseError("edge list not terminated by -1", len(lines))
    for line_no, line in enumerate(lines[idx:], start=idx + 1):
        if line.strip() and line.strip() != "EOF":
            raise ParseError(f"unexpected trailing content {line.strip()!r}", line_no)

    graph = UndirectedGraph(dimension, edges)
    meta = _meta_from_tokens(comment_tokens, name, directed=False, line_no=comment_line)
    return ParsedInstance(graph, meta)


def _parse_dhc(lines: list[str]) -> ParsedInstance:
    order: int | None = None
    declared_arcs: int | None = None
    header_line = 0
    name = ""
    tokens: list[str] = []
    arcs: set[tuple[int, int]] = set()
    for idx, raw in enumerate(lines):
        line_no = idx + 1
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            body = line[1:].strip()
            if "=" in body:
                tokens.append(body)
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "dhc":
                raise ParseError(f"bad problem line {line!r}", line_no)
            if order is not None:
                raise ParseError("duplicate problem line", line_no)
            try:
                order, declared_arcs = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"bad problem line {line!r}", line_no) from None
            if order < 1 or declared_arcs < 0:
                raise ParseError(f"bad counts in problem line {line!r}", line_no)
            header_line = line_no
            continue
        if line.startswith("a"):
            if order is None:
                raise ParseError("arc line before problem line", line_no)
            parts = line.split()
            if len(parts) != 3:
                raise ParseError(f"arc lines read 'a u v', got {line!r}", line_no)
            u = _parse_vertex(parts[1], order, line_no)
            v = _parse_vertex(parts[2], order, line_no)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", line_no)
            if (u, v) in arcs:
                raise ParseError(f"duplicate arc ({u}, {v})", line_no)
            arcs.add((u, v))
            continue
        raise ParseError(f"unrecognised line {line!r}", line_no)
    if order is None:
        raise ParseError("missing problem line", len(lines))
    if len(arcs) != declared_arcs:
        raise DimensionMismatch(
            f"problem line declares {declared_arcs} arcs but body has {len(arcs)}",
            header_line,
        )
    graph = DirectedGraph(order, arcs)
    meta = _meta_from_tokens(tokens, name, directed=True, line_no=header_line)
    return ParsedInstance(graph, meta)


def parse(text: str, fmt: str | None = None) -> ParsedInstance:
    """Parse instance text in either dialect, auto-detecting when fmt is None."""
    lines = text.split("\n")
    if fmt is None:
        fmt = ""
        for line in lines:
            stripped = line.strip()
            if not stripped:
                continue
            if stripped.startswith("NAME"):
                fmt = "tsplib"
            elif stripped.startswith(("p ", "c ", "c=", "a ")) or stripped == "p":
                fmt = "dhc"
            break
        if not fmt:
            raise ParseError("unrecognised instance format", 1)
    if fmt == "tsplib":
        return _parse_tsplib(lines)
    if fmt == "dhc":
        return _parse_dhc(lines)
    raise InvalidParameter(f"unknown format hint {fmt!r}")
