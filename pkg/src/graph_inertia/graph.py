"""Weighted-graph model, parsing/serialization, and topological classification."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable

from .core import GraphError, ParseError, parse_rational
from .matrix import SymRationalMatrix

__all__ = [
    "WeightedGraph",
    "GraphFormat",
    "GraphClass",
    "ComponentClass",
    "Classification",
    "parse_graph",
    "serialize_graph",
    "adjacency_matrix",
    "classify",
    "connected_components",
]

Edge = tuple[str, str, Fraction]


class WeightedGraph:
    """Simple undirected graph with exact, strictly positive rational weights.

    Vertices keep the order in which they were supplied (parsers use
    first-appearance order); that order fixes adjacency-matrix rows, so
    equal inputs always produce identical matrices.  Instances are
    immutable and safe to share between threads.
    """

    __slots__ = ("_vertices", "_index", "_edges", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple] = ()) -> None:
        vs = tuple(vertices)
        index: dict[str, int] = {}
        for v in vs:
            if not isinstance(v, str) or not v or any(ch.isspace() for ch in v):
                raise GraphError(f"vertex id must be a non-empty string without whitespace: {v!r}")
            if v in index:
                raise GraphError(f"duplicate vertex id {v!r}")
            index[v] = len(index)
        adj: dict[str, dict[str, Fraction]] = {v: {} for v in vs}
        out: list[Edge] = []
        for u, v, w in edges:
            w = Fraction(w)
            if u == v:
                raise GraphError(f"self-loop at vertex {u!r}")
            if u not in adj:
                raise GraphError(f"edge endpoint {u!r} is not a declared vertex")
            if v not in adj:
                raise GraphError(f"edge endpoint {v!r} is not a declared vertex")
            if w <= 0:
                raise GraphError(f"edge {u!r}-{v!r} has non-positive weight {w}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge {u!r}-{v!r}")
            adj[u][v] = w
            adj[v][u] = w
            out.append((u, v, w))
        self._vertices = vs
        self._index = index
        self._edges = tuple(out)
        self._adj = adj

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], isolated: Iterable[str] = ()) -> "WeightedGraph":
        """Build a graph whose vertex order is first appearance across edges."""
        edges = tuple(edges)
        seen: dict[str, None] = {}
        for u, v, _ in edges:
            seen.setdefault(u)
            seen.setdefault(v)
        for v in isolated:
            seen.setdefault(v)
        return cls(tuple(seen), edges)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def vertex_index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def degree(self, v: str) -> int:
        self.vertex_index(v)
        return len(self._adj[v])

    def neighbors(self, v: str) -> tuple[tuple[str, Fraction], ...]:
        """Neighbors of v with weights, in edge-insertion order."""
        self.vertex_index(v)
        return tuple(self._adj[v].items())

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def weight(self, u: str, v: str) -> Fraction:
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {u!r}-{v!r}")
        return self._adj[u][v]

    def induced(self, keep: Iterable[str]) -> "WeightedGraph":
        """Induced weighted subgraph on ``keep``, preserving vertex order."""
        keepset = set(keep)
        unknown = keepset - set(self._vertices)
        if unknown:
            raise GraphError(f"unknown vertices {sorted(unknown)!r}")
        vs = tuple(v for v in self._vertices if v in keepset)
        es = tuple(e for e in self._edges if e[0] in keepset and e[1] in keepset)
        return WeightedGraph(vs, es)

    def without(self, drop: Iterable[str]) -> "WeightedGraph":
        dropset = set(drop)
        return self.induced(v for v in self._vertices if v not in dropset)

    def union(self, other: "WeightedGraph") -> "WeightedGraph":
        """Disjoint union; vertex sets must not overlap."""
        overlap = set(self._vertices) & set(other._vertices)
        if overlap:
            raise GraphError(f"union of non-disjoint graphs (shared: {sorted(overlap)!r})")
        return WeightedGraph(self._vertices + other._vertices, self._edges + other._edges)

    def relabel(self, fn: Callable[[str], str]) -> "WeightedGraph":
        return WeightedGraph(
            tuple(fn(v) for v in self._vertices),
            tuple((fn(u), fn(v), w) for u, v, w in self._edges),
        )

    def _edge_keys(self) -> frozenset:
        return frozenset(
            (min(u, v, key=self._index.__getitem__), max(u, v, key=self._index.__getitem__), w)
            for u, v, w in self._edges
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edge_keys() == other._edge_keys()

    def __hash__(self) -> int:
        return hash((self._vertices, self._edge_keys()))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"


class GraphFormat(str, Enum):
    EDGELIST = "edgelist"
    JSON = "json"


def _parse_edgelist(text: str) -> WeightedGraph:
    vertices: list[str] = []
    seen: set[str] = set()
    pairs: set[frozenset] = set()
    edges: list[Edge] = []

    def register(v: str) -> None:
        if v not in seen:
            seen.add(v)
            vertices.append(v)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            for tok in line[len("vertices:"):].split():
                register(tok)
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected '<u> <v> <weight>', got {line!r}", lineno)
        u, v, wtext = parts
        try:
            w = parse_rational(wtext)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if w <= 0:
            raise ParseError(f"non-positive weight {w}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u!r}", lineno)
        key = frozenset((u, v))
        if key in pairs:
            raise ParseError(f"duplicate edge {u!r}-{v!r}", lineno)
        pairs.add(key)
        register(u)
        register(v)
        edges.append((u, v, w))
    return WeightedGraph(vertices, edges)


def _parse_json(text: str) -> WeightedGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid json: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("top-level json value must be an object")
    vertices = obj.get("vertices", [])
    raw_edges = obj.get("edges", [])
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError('"vertices" must be a list of strings')
    if not isinstance(raw_edges, list):
        raise ParseError('"edges" must be a list')
    seen: dict[str, None] = {}
    for v in vertices:
        seen.setdefault(v)
    edges: list[Edge] = []
    for item in raw_edges:
        if not (isinstance(item, list) and len(item) == 3):
            raise ParseError(f"each edge must be [u, v, weight], got {item!r}")
        u, v, wraw = item
        if not (isinstance(u, str) and isinstance(v, str)):
            raise ParseError(f"edge endpoints must be strings: {item!r}")
        try:
            w = parse_rational(wraw) if isinstance(wraw, str) else Fraction(wraw)
        except (ValueError, TypeError) as exc:
            raise ParseError(f"bad weight {wraw!r}: {exc}") from None
        seen.setdefault(u)
        seen.setdefault(v)
        edges.append((u, v, w))
    try:
        return WeightedGraph(tuple(seen), edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def parse_graph(text: str | bytes, fmt: GraphFormat | str = GraphFormat.EDGELIST) -> WeightedGraph:
    """Parse a graph from edge-list or json text; weights are exact rationals."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.EDGELIST:
        return _parse_edgelist(text)
    return _parse_json(text)


def serialize_graph(g: WeightedGraph, fmt: GraphFormat | str = GraphFormat.EDGELIST) -> str:
    """Serialize so that ``parse_graph(serialize_graph(g), fmt) == g``."""
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.EDGELIST:
        lines = []
        if g.n:
            # The header pins the full vertex order, not just isolated vertices.
            lines.append("vertices: " + " ".join(g.vertices))
        lines.extend(f"{u} {v} {w}" for u, v, w in g.edges)
        return "\n".join(lines) + ("\n" if lines else "")
    obj = {
        "vertices": list(g.vertices),
        "edges": [[u, v, str(w)] for u, v, w in g.edges],
    }
    return json.dumps(obj, indent=2) + "\n"


def adjacency_matrix(g: WeightedGraph) -> SymRationalMatrix:
    """Weighted adjacency matrix; row i corresponds to ``g.vertices[i]``."""
    n = g.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for u, v, w in g.edges:
        i, j = g.vertex_index(u), g.vertex_index(v)
        rows[i][j] = w
        rows[j][i] = w
    return SymRationalMatrix(tuple(tuple(r) for r in rows))


class GraphClass(Enum):
    EMPTY_EDGE_SET_FOREST = "empty-edge-set-forest"
    TREE = "tree"
    FOREST = "forest"
    UNICYCLIC = "unicyclic"
    BICYCLIC = "bicyclic"
    UNICYCLIC_FOREST_MIX = "unicyclic-forest-mix"
    BICYCLIC_MIX = "bicyclic-mix"
    UNSUPPORTED = "unsupported"


class ComponentClass(Enum):
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    BICYCLIC = "bicyclic"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class Classification:
    overall: GraphClass
    components: tuple[ComponentClass, ...]


def connected_components(g: WeightedGraph) -> list[WeightedGraph]:
    """Components as induced subgraphs, ordered by first vertex appearance."""
    unseen = dict.fromkeys(g.vertices)
    out = []
    while unseen:
        start = next(iter(unseen))
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for nb, _ in g.neighbors(x):
                if nb not in comp:
                    comp.add(nb)
                    stack.append(nb)
        for v in comp:
            unseen.pop(v, None)
        out.append(g.induced(comp))
    return out


def _component_class(c: WeightedGraph) -> ComponentClass:
    excess = c.m - c.n
    if excess == -1:
        return ComponentClass.TREE
    if excess == 0:
        return ComponentClass.UNICYCLIC
    if excess == 1:
        return ComponentClass.BICYCLIC
    return ComponentClass.UNSUPPORTED


def classify(g: WeightedGraph) -> Classification:
    """Per-component class by edge/vertex count, joined into a whole-graph class."""
    comps = connected_components(g)
    kinds = tuple(_component_class(c) for c in comps)
    if any(k is ComponentClass.UNSUPPORTED for k in kinds):
        overall = GraphClass.UNSUPPORTED
    elif g.m == 0:
        overall = GraphClass.EMPTY_EDGE_SET_FOREST
    elif all(k is ComponentClass.TREE for k in kinds):
        overall = GraphClass.TREE if len(kinds) == 1 else GraphClass.FOREST
    elif any(k is ComponentClass.BICYCLIC for k in kinds):
        overall = GraphClass.BICYCLIC if len(kinds) == 1 else GraphClass.BICYCLIC_MIX
    else:
        overall = GraphClass.UNICYCLIC if len(kinds) == 1 else GraphClass.UNICYCLIC_FOREST_MIX
    return Classification(overall, kinds)
