"""Deterministic generators for weighted trees, forests, unicyclic and
bicyclic graphs, plus weight samplers that can force each degenerate
equality branch of the closed forms exactly."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .closed_forms import INFINITY_TABLE, infinity_condition
from .core import GraphError
from .graph import WeightedGraph
from .structure import BaseDescriptor, BaseKind

__all__ = [
    "GenSpec",
    "generate",
    "random_weight",
    "build_cycle",
    "build_path",
    "build_tadpole",
    "build_infinity",
    "build_theta",
    "build_from_descriptor",
    "infinity_branches",
    "theta_branches",
    "sample_infinity_weights",
    "sample_theta_weights",
    "sample_cycle_weights",
]


def random_weight(rng: random.Random) -> Fraction:
    """Small random positive rational; keeps exact arithmetic fast while making
    accidental product equalities unlikely."""
    return Fraction(rng.randint(1, 20), rng.randint(1, 10))


def _weights(rng: random.Random, count: int, unit: bool = False) -> tuple[Fraction, ...]:
    if unit:
        return tuple(Fraction(1) for _ in range(count))
    return tuple(random_weight(rng) for _ in range(count))


# ---------------------------------------------------------------------------
# explicit builders


def build_cycle(weights: Sequence[Fraction], prefix: str = "v") -> WeightedGraph:
    n = len(weights)
    if n < 3:
        raise GraphError("a cycle needs at least 3 edges")
    names = [f"{prefix}{i}" for i in range(n)]
    edges = [(names[i], names[(i + 1) % n], Fraction(weights[i])) for i in range(n)]
    return WeightedGraph(names, edges)


def build_path(weights: Sequence[Fraction], prefix: str = "p") -> WeightedGraph:
    """Path with ``len(weights) + 1`` vertices; zero weights yields one vertex."""
    names = [f"{prefix}{i}" for i in range(len(weights) + 1)]
    edges = [(names[i], names[i + 1], Fraction(w)) for i, w in enumerate(weights)]
    return WeightedGraph(names, edges)


def build_tadpole(cycle_weights: Sequence[Fraction], tail_weights: Sequence[Fraction]) -> WeightedGraph:
    """Cycle with a pendant path attached at its first vertex."""
    g = build_cycle(cycle_weights, prefix="v")
    names = ["v0"] + [f"t{i}" for i in range(1, len(tail_weights) + 1)]
    edges = list(g.edges) + [
        (names[i], names[i + 1], Fraction(w)) for i, w in enumerate(tail_weights)
    ]
    return WeightedGraph(tuple(g.vertices) + tuple(names[1:]), edges)


def build_infinity(
    p: int,
    l: int,
    q: int,
    a: Sequence[Fraction],
    b: Sequence[Fraction],
    c: Sequence[Fraction],
) -> WeightedGraph:
    """Two cycles of lengths p and q joined by a path with ``l - 1`` edges.

    ``a``/``b`` walk each cycle starting at its junction; ``c`` walks the
    connecting path from the p-side junction.  ``l == 1`` shares one vertex.
    """
    if p < 3 or q < 3 or l < 1:
        raise GraphError(f"infinity({p},{l},{q}) is not a valid shape")
    if len(a) != p or len(b) != q or len(c) != l - 1:
        raise GraphError("weight sequence lengths must be (p, q, l-1)")
    us = [f"u{i}" for i in range(p)]
    vs = [f"v{i}" for i in range(q)]
    if l == 1:
        vs[0] = us[0]
    edges = [(us[i], us[(i + 1) % p], Fraction(a[i])) for i in range(p)]
    edges += [(vs[i], vs[(i + 1) % q], Fraction(b[i])) for i in range(q)]
    ws = [us[0]] + [f"w{i}" for i in range(1, l - 1)] + [vs[0]]
    edges += [(ws[i], ws[i + 1], Fraction(c[i])) for i in range(l - 1)]
    vertices = us + ws[1:-1] + (vs if l > 1 else vs[1:])
    return WeightedGraph(vertices, edges)


def build_theta(
    p: int,
    l: int,
    q: int,
    a: Sequence[Fraction],
    b: Sequence[Fraction],
    c: Sequence[Fraction],
) -> WeightedGraph:
    """Two hubs joined by three internally disjoint paths with p-1, l-1 and
    q-1 edges; at most one path may be a single edge."""
    sizes = (p, l, q)
    if min(sizes) < 2 or sum(1 for s in sizes if s == 2) > 1:
        raise GraphError(f"theta({p},{l},{q}) is not a valid shape")
    if (len(a), len(b), len(c)) != (p - 1, l - 1, q - 1):
        raise GraphError("weight sequence lengths must be (p-1, l-1, q-1)")
    vertices = ["u", "v"]
    edges = []
    for label, size, seq in (("a", p, a), ("b", l, b), ("c", q, c)):
        inner = [f"{label}{i}" for i in range(1, size - 1)]
        vertices.extend(inner)
        chain = ["u"] + inner + ["v"]
        edges += [(chain[i], chain[i + 1], Fraction(seq[i])) for i in range(size - 1)]
    return WeightedGraph(vertices, edges)


def build_from_descriptor(d: BaseDescriptor) -> WeightedGraph:
    """Reassemble the graph a descriptor came from, on its own vertex ids."""
    if d.kind is BaseKind.CYCLE:
        vs = d.a_vertices
        edges = [(vs[i], vs[(i + 1) % d.p], d.a[i]) for i in range(d.p)]
        return WeightedGraph(vs, edges)
    if d.kind is BaseKind.INFINITY:
        edges = [(d.a_vertices[i], d.a_vertices[(i + 1) % d.p], d.a[i]) for i in range(d.p)]
        edges += [(d.b_vertices[i], d.b_vertices[(i + 1) % d.q], d.b[i]) for i in range(d.q)]
        chain = [d.a_vertices[0], *d.c_vertices, d.b_vertices[0]]
        edges += [(chain[i], chain[i + 1], d.c[i]) for i in range(len(d.c))]
        vertices = dict.fromkeys(d.a_vertices + d.c_vertices + d.b_vertices)
        return WeightedGraph(tuple(vertices), edges)
    edges = []
    for seq, chain in ((d.a, d.a_vertices), (d.b, d.b_vertices), (d.c, d.c_vertices)):
        edges += [(chain[i], chain[i + 1], seq[i]) for i in range(len(seq))]
    vertices = dict.fromkeys(d.a_vertices + d.b_vertices + d.c_vertices)
    return WeightedGraph(tuple(vertices), edges)


# ---------------------------------------------------------------------------
# branch-forcing weight samplers

_INFINITY_CONDITIONED = frozenset(
    shape for shape, row in INFINITY_TABLE.items() if row.condition_text is not None
)


def infinity_branches(p: int, l: int, q: int) -> tuple[str, ...]:
    """Forcible weight-condition branches of an infinity representative."""
    if (p, l, q) in _INFINITY_CONDITIONED:
        return ("gt", "eq", "lt")
    if 4 in (p, q):
        return ("eq", "neq")
    return ()


def theta_branches(p: int, l: int, q: int) -> tuple[str, ...]:
    """Forcible weight-condition branches of a (sorted) theta representative."""
    sizes = tuple(sorted((p, l, q)))
    if sizes == (3, 3, 3):
        return ("eq:ceq", "eq:cneq", "neq")
    if sizes[:2] == (3, 3):
        return ("eq", "neq")
    if sizes == (2, 4, 4):
        return ("ceq", "cneq")
    if sizes == (5, 5, 5):
        return ("eq:ceq", "eq:cneq", "neq")
    if sizes[1:] == (5, 5):
        return ("eq", "neq")
    if sizes == (2, 4, 6):
        return ("ceq", "cneq")
    if sizes in ((2, 3, 4), (2, 4, 5)):
        return ("gt", "eq", "lt")
    return ()


def sample_infinity_weights(p, l, q, rng, branch=None, unit=False):
    """Weight sequences for an infinity shape; ``branch`` forces a condition.

    For conditioned table rows the branch is "gt"/"eq"/"lt"; for shapes with a
    4-cycle, "eq" forces each 4-cycle's alternating products equal and "neq"
    keeps them apart.
    """
    a = list(_weights(rng, p, unit))
    b = list(_weights(rng, q, unit))
    c = list(_weights(rng, l - 1, unit))
    if branch is None:
        return tuple(a), tuple(b), tuple(c)
    if (p, l, q) in _INFINITY_CONDITIONED:
        # The condition is linear in a1, so solve for it at a1 = 1.
        probe = infinity_condition(p, l, q, [Fraction(1)] + a[1:], b, c)
        pivot = probe.rhs / probe.lhs
        scale = {"eq": Fraction(1), "gt": Fraction(2), "lt": Fraction(1, 2)}[branch]
        a[0] = pivot * scale
        return tuple(a), tuple(b), tuple(c)
    if 4 in (p, q):
        for ws in (a, b):
            if len(ws) == 4:
                balanced = ws[1] * ws[3] / ws[2]
                ws[0] = balanced if branch == "eq" else balanced * 2
        return tuple(a), tuple(b), tuple(c)
    raise GraphError(f"infinity({p},{l},{q}) has no weight-condition branches")


def sample_cycle_weights(n, rng, branch=None, unit=False):
    """Cycle weights; branch "eq" forces equal alternating products (n % 4 == 0)."""
    ws = list(_weights(rng, n, unit))
    if branch is None:
        return tuple(ws)
    if n % 4 != 0:
        raise GraphError("only cycles of length divisible by 4 have a weight condition")
    odd = Fraction(1)
    even = Fraction(1)
    for i, w in enumerate(ws):
        if i == 0:
            continue
        if i % 2 == 0:
            odd *= w
        else:
            even *= w
    ws[0] = even / odd if branch == "eq" else 2 * even / odd
    return tuple(ws)


def sample_theta_weights(p, l, q, rng, branch=None, unit=False):
    """Weight sequences (sorted-slot order) for a theta shape.

    Branch ids follow ``theta_branches``: "eq"/"neq" act on the main product
    condition of the twin-path case; "ceq"/"cneq" act on the alternating
    condition of the 4-cycle that the case reduces to; "gt"/"eq"/"lt" order
    the two products of the small explicit cases.
    """
    p, l, q = sorted((p, l, q))
    a = list(_weights(rng, p - 1, unit))
    b = list(_weights(rng, l - 1, unit))
    c = list(_weights(rng, q - 1, unit))
    if branch is None:
        return tuple(a), tuple(b), tuple(c)
    sizes = (p, l, q)
    main, _, sub = branch.partition(":")

    if sizes[:2] == (3, 3) or (sizes[0] == 2 and sizes[1] == sizes[2] == 3):
        # Twin 2-edge paths: condition A0*B1 == A1*B0 on them.
        first, second = (a, b) if sizes[0] == 3 else (b, c)
        if main == "eq" or main.startswith("eq"):
            first[0] = first[1] * second[0] / second[1]
        else:
            first[0] = 2 * first[1] * second[0] / second[1]
        if sub and sizes == (3, 3, 3):
            # Reduced 4-cycle (A0, A1, C1, C0): force/deny A0*C1 == A1*C0.
            target = a[0] * c[1] / a[1]
            c[0] = target if sub == "ceq" else target * 2
    elif sizes.count(4) >= 2 and sizes[0] == 2:
        # theta(2,4,4): reduced 4-cycle (B0, B1, B2', A0) with the twin-path fold.
        folded = b[2] + c[0] * b[1] * c[2] / (b[0] * c[1])
        target = b[0] * folded / b[1]
        a[0] = target if main == "ceq" else target * 2
    elif sizes[1:] == (5, 5):
        first, second = (b, c)
        if main in ("eq",) or main.startswith("eq"):
            first[0] = second[0] * first[1] * second[2] * first[3] / (second[1] * first[2] * second[3])
        else:
            first[0] = 2 * second[0] * first[1] * second[2] * first[3] / (second[1] * first[2] * second[3])
        if sub and sizes == (5, 5, 5):
            # Reduced 8-cycle (B0..B3, A3..A0): force/deny alternating products.
            a[1] = b[1] * b[3] * a[2] * a[0] / (b[0] * b[2] * a[3])
            if sub == "cneq":
                a[1] *= 2
    elif sizes[0] == 2 and 6 in sizes:
        # theta(2,l,6): direct edge absorbs the folded 6-path; only l == 4
        # leaves a weight-sensitive 4-cycle (folded, B2, B1, B0).
        folded = a[0] + c[0] * c[2] * c[4] / (c[1] * c[3])
        if sizes[1] == 4:
            target = folded * b[1] / b[0]
            b[2] = target if main == "ceq" else target * 2
    elif sizes in ((2, 3, 4), (2, 4, 5)):
        # Explicit case: direct edge E and 3-edge path F; order E0*F1 vs F0*F2.
        f = b if sizes == (2, 4, 5) else c
        pivot = f[0] * f[2] / f[1]
        scale = {"eq": Fraction(1), "gt": Fraction(2), "lt": Fraction(1, 2)}[main]
        a[0] = pivot * scale
    else:
        raise GraphError(f"theta{tuple(sizes)} has no branch {branch!r}")
    return tuple(a), tuple(b), tuple(c)


# ---------------------------------------------------------------------------
# random graph generation


@dataclass(frozen=True)
class GenSpec:
    """Deterministic generation request; ``seed`` fully determines the output.

    ``regime`` is "random", "unit", or "force"; a force regime picks (or is
    given via ``branch``) a degenerate weight-condition branch to satisfy
    exactly.
    """

    target: str
    n: int
    seed: int
    regime: str = "random"
    branch: str | None = None


def _attach_forest(rng, g, n_total, unit, label_start=0):
    """Attach extra vertices one at a time to uniformly chosen earlier vertices."""
    vertices = list(g.vertices)
    edges = list(g.edges)
    i = label_start
    while len(vertices) < n_total:
        name = f"t{i}"
        i += 1
        if name in set(vertices):
            continue
        anchor = vertices[rng.randrange(len(vertices))]
        w = Fraction(1) if unit else random_weight(rng)
        vertices.append(name)
        edges.append((anchor, name, w))
    return WeightedGraph(vertices, edges)


def _random_tree(rng, n, unit):
    names = [str(i) for i in range(n)]
    edges = []
    for i in range(1, n):
        parent = names[rng.randrange(i)]
        w = Fraction(1) if unit else random_weight(rng)
        edges.append((parent, names[i], w))
    return WeightedGraph(names, edges)


def generate(spec: GenSpec) -> WeightedGraph:
    """Generate a graph of the requested class; a pure function of ``spec``."""
    rng = random.Random(spec.seed)
    unit = spec.regime == "unit"
    force = spec.regime == "force"
    n = spec.n

    if spec.target == "tree":
        if n < 1:
            raise GraphError("a tree needs at least one vertex")
        return _random_tree(rng, n, unit)

    if spec.target == "forest":
        if n < 1:
            raise GraphError("a forest needs at least one vertex")
        tree = _random_tree(rng, n, unit)
        edges = [e for e in tree.edges if rng.random() >= 0.25]
        return WeightedGraph(tree.vertices, edges)

    if spec.target == "unicyclic":
        if n < 3:
            raise GraphError("a unicyclic graph needs at least 3 vertices")
        if force:
            lengths = [k for k in range(4, n + 1, 4)]
            cycle_len = rng.choice(lengths) if lengths else rng.randint(3, n)
            branch = spec.branch or "eq"
            if cycle_len % 4 == 0:
                ws = sample_cycle_weights(cycle_len, rng, branch=branch)
            else:
                ws = sample_cycle_weights(cycle_len, rng)
        else:
            cycle_len = rng.randint(3, n)
            ws = sample_cycle_weights(cycle_len, rng, unit=unit)
        return _attach_forest(rng, build_cycle(ws), n, unit)

    if spec.target == "bicyclic":
        if n < 4:
            raise GraphError("a bicyclic graph needs at least 4 vertices")
        for _ in range(200):
            if rng.random() < 0.5:
                p = rng.randint(3, 6)
                q = rng.randint(3, 6)
                l = rng.randint(1, 5)
                if p + q + l - 2 > n:
                    continue
                p, q = min(p, q), max(p, q)
                if force:
                    branches = infinity_branches(p, l, q)
                    branch = spec.branch or (rng.choice(branches) if branches else None)
                else:
                    branch = None
                a, b, c = sample_infinity_weights(p, l, q, rng, branch=branch, unit=unit)
                base = build_infinity(p, l, q, a, b, c)
            else:
                sizes = sorted(rng.randint(2, 6) for _ in range(3))
                if sum(1 for s in sizes if s == 2) > 1 or sum(sizes) - 4 > n:
                    continue
                p, l, q = sizes
                if force:
                    branches = theta_branches(p, l, q)
                    branch = spec.branch or (rng.choice(branches) if branches else None)
                else:
                    branch = None
                a, b, c = sample_theta_weights(p, l, q, rng, branch=branch, unit=unit)
                base = build_theta(p, l, q, a, b, c)
            return _attach_forest(rng, base, n, unit)
        raise GraphError(f"no bicyclic base fits within n={n}")

    raise GraphError(f"unknown generation target {spec.target!r}")
