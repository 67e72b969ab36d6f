"""Forest matching, matched-vertex tests, 2-core peeling and base extraction."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import GraphError
from .graph import WeightedGraph, connected_components

__all__ = [
    "BaseKind",
    "BaseDescriptor",
    "HangingTree",
    "max_matching_forest",
    "is_mismatched",
    "two_core",
    "describe_base",
    "hanging_trees",
]


def max_matching_forest(g: WeightedGraph) -> int:
    """Matching number of an acyclic graph by leaf-first greedy deletion.

    Repeatedly matching a leaf with its unique neighbor and deleting both is
    optimal on forests and runs in linear time.  Cyclic input is rejected.
    """
    degree = {v: g.degree(v) for v in g.vertices}
    adj = {v: {nb for nb, _ in g.neighbors(v)} for v in g.vertices}
    alive = set(g.vertices)
    leaves = [v for v in g.vertices if degree[v] == 1]
    matched = 0
    while leaves:
        v = leaves.pop()
        if v not in alive or degree[v] != 1:
            continue
        (u,) = (x for x in adj[v] if x in alive)
        matched += 1
        alive.discard(v)
        alive.discard(u)
        for nb in adj[u]:
            if nb in alive:
                degree[nb] -= 1
                if degree[nb] == 1:
                    leaves.append(nb)
    if any(degree[v] > 0 for v in alive):
        raise GraphError("input contains a cycle; matching requires a forest")
    return matched


def is_mismatched(t: WeightedGraph, v: str) -> bool:
    """True iff deleting v does not decrease the matching number of the tree.

    A single-vertex tree counts as mismatched.
    """
    if t.m != t.n - 1 or len(connected_components(t)) != 1:
        raise GraphError("is_mismatched requires a tree")
    if not t.has_vertex(v):
        raise GraphError(f"vertex {v!r} not in tree")
    return max_matching_forest(t.without([v])) == max_matching_forest(t)


def two_core(g: WeightedGraph) -> WeightedGraph:
    """Maximal subgraph of minimum degree 2, found by peeling low-degree vertices.

    For a connected unicyclic graph this is its unique cycle; for a connected
    bicyclic graph it is the embedded double-cycle base.  Forests peel away
    completely, which is an error.
    """
    degree = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    queue = [v for v in g.vertices if degree[v] <= 1]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for nb, _ in g.neighbors(v):
            if nb in alive:
                degree[nb] -= 1
                if degree[nb] <= 1:
                    queue.append(nb)
    if not alive:
        raise GraphError("graph is a forest; its 2-core is empty")
    return g.induced(alive)


class BaseKind(Enum):
    CYCLE = "cycle"
    INFINITY = "infinity"
    THETA = "theta"


@dataclass(frozen=True)
class BaseDescriptor:
    """Canonical description of a cycle, a double-cycle (infinity) base, or a
    theta base, with weight sequences read in a fixed orientation.

    CYCLE: ``p`` is the length; edge i joins ``a_vertices[i]`` to
    ``a_vertices[(i+1) % p]`` with weight ``a[i]``; ``l = q = 0``.

    INFINITY: two cycles of lengths ``p <= q`` joined by a path with ``l - 1``
    edges (``l == 1`` means they share one vertex).  ``a_vertices`` walks the
    p-cycle starting at its junction, ``b_vertices`` the q-cycle likewise,
    and ``c_vertices`` lists the path's interior vertices from the p-side;
    ``c[i]`` are the path's edge weights from the p-junction onward.

    THETA: two hub vertices joined by three internally disjoint paths with
    ``p - 1 <= l - 1 <= q - 1`` edges.  Each of ``a_vertices``/``b_vertices``/
    ``c_vertices`` runs hub-to-hub (both hubs included), and ``a``/``b``/``c``
    are the corresponding edge weights.
    """

    kind: BaseKind
    p: int
    l: int
    q: int
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    a_vertices: tuple[str, ...]
    b_vertices: tuple[str, ...]
    c_vertices: tuple[str, ...]

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.p, self.l, self.q)

    def __str__(self) -> str:
        if self.kind is BaseKind.CYCLE:
            return f"cycle({self.p})"
        return f"{self.kind.value}({self.p},{self.l},{self.q})"


@dataclass(frozen=True)
class HangingTree:
    """Maximal tree of a unicyclic/bicyclic graph hanging off one core vertex."""

    root: str
    tree: WeightedGraph
    matched_at_root: bool


@dataclass(frozen=True)
class _Thread:
    """Maximal chain of degree-2 vertices between two branch vertices."""

    start: str
    end: str
    inner: tuple[str, ...]
    weights: tuple[Fraction, ...]


def _walk_threads(core: WeightedGraph, hubs: set[str]) -> list[_Thread]:
    used: set[frozenset] = set()
    threads = []
    for h in core.vertices:
        if h not in hubs:
            continue
        for nb, w in core.neighbors(h):
            key = frozenset((h, nb))
            if key in used:
                continue
            used.add(key)
            inner: list[str] = []
            weights = [w]
            prev, cur = h, nb
            while cur not in hubs:
                inner.append(cur)
                nxt, wn = next((x, wx) for x, wx in core.neighbors(cur) if x != prev)
                weights.append(wn)
                used.add(frozenset((cur, nxt)))
                prev, cur = cur, nxt
            threads.append(_Thread(h, cur, tuple(inner), tuple(weights)))
    return threads


def _cycle_candidates(order: list[str], weight_of) -> list[tuple]:
    n = len(order)
    out = []
    for direction in (order, [order[0]] + order[:0:-1]):
        for shift in range(n):
            rotated = direction[shift:] + direction[:shift]
            ws = tuple(weight_of(rotated[i], rotated[(i + 1) % n]) for i in range(n))
            out.append((ws, tuple(rotated)))
    return out


def _loop_orientations(t: _Thread):
    yield (t.start, *t.inner), t.weights
    yield (t.start, *reversed(t.inner)), tuple(reversed(t.weights))


def describe_base(core: WeightedGraph) -> BaseDescriptor:
    """Canonical descriptor of a 2-core (a cycle or a double-cycle base).

    Ambiguities (which cycle is first, walk directions, hub order) are
    settled by picking the lexicographically smallest realization, so equal
    cores always yield identical descriptors.
    """
    if core.n == 0 or len(connected_components(core)) != 1:
        raise GraphError("core must be connected and non-empty")
    if any(core.degree(v) < 2 for v in core.vertices):
        raise GraphError("core has a vertex of degree < 2; not a 2-core")

    if core.m == core.n:
        # All degrees are exactly 2: a single cycle.
        order = [core.vertices[0]]
        prev: str | None = None
        while len(order) < core.n:
            cur = order[-1]
            nxt = next(x for x, _ in core.neighbors(cur) if x != prev)
            order.append(nxt)
            prev = cur
        ws, vs = min(_cycle_candidates(order, core.weight))
        return BaseDescriptor(BaseKind.CYCLE, core.n, 0, 0, ws, (), (), vs, (), ())

    if core.m != core.n + 1:
        raise GraphError("core matches neither a cycle nor a double-cycle base")

    hubs = [v for v in core.vertices if core.degree(v) >= 3]
    degs = sorted(core.degree(h) for h in hubs)
    if degs not in ([4], [3, 3]):
        raise GraphError("core matches neither an infinity base nor a theta base")
    threads = _walk_threads(core, set(hubs))
    loops = [t for t in threads if t.start == t.end]
    links = [t for t in threads if t.start != t.end]

    candidates: list[tuple] = []
    if len(loops) == 2 and len(links) <= 1:
        link = links[0] if links else None
        l = 1 if link is None else len(link.weights) + 1
        for first, second in ((loops[0], loops[1]), (loops[1], loops[0])):
            p, q = len(first.weights), len(second.weights)
            if p > q:
                continue
            if link is None:
                c_ws: tuple = ()
                c_vs: tuple = ()
            elif link.start == first.start:
                c_ws, c_vs = link.weights, link.inner
            else:
                c_ws, c_vs = tuple(reversed(link.weights)), tuple(reversed(link.inner))
            for a_vs, a_ws in _loop_orientations(first):
                for b_vs, b_ws in _loop_orientations(second):
                    candidates.append((p, l, q, a_ws, b_ws, c_ws, a_vs, b_vs, c_vs))
        kind = BaseKind.INFINITY
    elif len(loops) == 0 and len(links) == 3:
        h1, h2 = hubs
        for u, v in ((h1, h2), (h2, h1)):
            oriented = []
            for t in links:
                if t.start == u:
                    vs = (u, *t.inner, v)
                    ws = t.weights
                else:
                    vs = (u, *reversed(t.inner), v)
                    ws = tuple(reversed(t.weights))
                oriented.append((len(ws) + 1, ws, vs))
            oriented.sort()
            (p, a_ws, a_vs), (l, b_ws, b_vs), (q, c_ws, c_vs) = oriented
            candidates.append((p, l, q, a_ws, b_ws, c_ws, a_vs, b_vs, c_vs))
        kind = BaseKind.THETA
    else:
        raise GraphError("core matches neither an infinity base nor a theta base")

    p, l, q, a_ws, b_ws, c_ws, a_vs, b_vs, c_vs = min(candidates)
    if kind is BaseKind.THETA and sum(1 for s in (p, l, q) if s == 2) > 1:
        raise GraphError("theta base with two length-1 paths is not a simple graph")
    return BaseDescriptor(kind, p, l, q, a_ws, b_ws, c_ws, a_vs, b_vs, c_vs)


def hanging_trees(g: WeightedGraph, core: WeightedGraph) -> list[HangingTree]:
    """One hanging tree per core vertex; trees partition the non-core vertices.

    ``core`` must be exactly ``two_core(g)``.  Core vertices with nothing
    attached yield single-vertex trees, which are mismatched by convention.
    """
    if set(core.vertices) != set(two_core(g).vertices):
        raise GraphError("core is not the 2-core of the graph")
    coreset = set(core.vertices)
    out = []
    claimed: set[str] = set()
    for v in core.vertices:
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for nb, _ in g.neighbors(x):
                if nb in coreset or nb in comp:
                    continue
                comp.add(nb)
                stack.append(nb)
        tree = g.induced(comp)
        non_root = comp - {v}
        if non_root & claimed:
            raise GraphError("hanging trees overlap; graph is not unicyclic/bicyclic")
        claimed |= non_root
        out.append(HangingTree(v, tree, matched_at_root=not is_mismatched(tree, v)))
    return out
