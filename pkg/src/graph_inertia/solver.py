"""Top-level structural inertia computation.

Each connected component is dispatched on its class.  Forests are a matching
count.  A unicyclic or bicyclic component either has a core vertex whose
hanging tree matches it (type I: split that tree off and recurse on the rest)
or has none (type II: cut the whole core out and evaluate it in closed form).
The result always equals the congruence oracle; the oracle is also the
explicit fallback for components outside the supported classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .closed_forms import (
    ClosedFormUnavailable,
    cycle_inertia,
    forest_inertia,
    infinity_base_inertia,
    theta_base_inertia,
)
from .core import GraphError, Inertia
from .graph import ComponentClass, WeightedGraph, classify, connected_components
from .oracle import inertia_oracle
from .reduction import ReductionRule, ReductionStep, ReductionTrace
from .structure import (
    BaseKind,
    HangingTree,
    describe_base,
    hanging_trees,
    is_mismatched,
    two_core,
)

__all__ = ["Method", "SolveResult", "JoinDecision", "solve", "solve_unicyclic", "solve_bicyclic", "joining_decompose"]


class Method(Enum):
    FOREST = "Forest"
    CYCLE_CLOSED_FORM = "CycleClosedForm"
    UNICYCLIC_TYPE_I = "UnicyclicTypeI"
    UNICYCLIC_TYPE_II = "UnicyclicTypeII"
    BICYCLIC_TYPE_I = "BicyclicTypeI"
    BICYCLIC_TYPE_II = "BicyclicTypeII"
    ORACLE_FALLBACK = "OracleFallback"


@dataclass(frozen=True)
class SolveResult:
    inertia: Inertia
    methods: tuple[Method, ...]
    trace: ReductionTrace


def _pick_matched_root(g: WeightedGraph, trees: list[HangingTree]) -> HangingTree | None:
    matched = [t for t in trees if t.matched_at_root]
    if not matched:
        return None
    choice = min(matched, key=lambda t: g.vertex_index(t.root))
    # A single-vertex hanging tree is mismatched by convention, so a matched
    # root always brings at least one extra vertex with it.
    if choice.tree.n < 2:
        raise GraphError("matched hanging tree cannot be a single vertex")
    return choice


def solve_unicyclic(g: WeightedGraph) -> SolveResult:
    """Inertia of a connected unicyclic graph by matched-root splitting or a
    cycle cut, never by matrix work."""
    if g.m != g.n or len(connected_components(g)) != 1:
        raise GraphError("solve_unicyclic requires a connected unicyclic graph")
    core = two_core(g)
    if core.n == g.n:
        d = describe_base(core)
        return SolveResult(cycle_inertia(d.a), (Method.CYCLE_CLOSED_FORM,), ReductionTrace())
    trees = hanging_trees(g, core)
    choice = _pick_matched_root(g, trees)
    if choice is not None:
        part = forest_inertia(choice.tree)
        rest = g.without(choice.tree.vertices)
        step = ReductionStep(
            ReductionRule.TYPE_I_DECOMPOSE, removed=choice.tree.vertices, offset=part.pn
        )
        return SolveResult(
            part + forest_inertia(rest),
            (Method.UNICYCLIC_TYPE_I,),
            ReductionTrace((step,)),
        )
    d = describe_base(core)
    cycle_part = cycle_inertia(d.a)
    outside = forest_inertia(g.without(core.vertices))
    step = ReductionStep(ReductionRule.TYPE_II_CUT, removed=core.vertices, offset=cycle_part.pn)
    return SolveResult(
        cycle_part + outside, (Method.UNICYCLIC_TYPE_II,), ReductionTrace((step,))
    )


def solve_bicyclic(g: WeightedGraph) -> SolveResult:
    """Inertia of a connected bicyclic graph; type I splits recurse into
    unicyclic graphs and trees, type II cuts out the whole base."""
    if g.m != g.n + 1 or len(connected_components(g)) != 1:
        raise GraphError("solve_bicyclic requires a connected bicyclic graph")
    core = two_core(g)
    trees = hanging_trees(g, core)
    choice = _pick_matched_root(g, trees)
    if choice is not None:
        part = forest_inertia(choice.tree)
        rest = solve(g.without(choice.tree.vertices))
        step = ReductionStep(
            ReductionRule.TYPE_I_DECOMPOSE, removed=choice.tree.vertices, offset=part.pn
        )
        return SolveResult(
            part + rest.inertia,
            (Method.BICYCLIC_TYPE_I,) + rest.methods,
            ReductionTrace((step,) + rest.trace.steps),
        )
    d = describe_base(core)
    try:
        if d.kind is BaseKind.INFINITY:
            base_part = infinity_base_inertia(d)
        else:
            base_part = theta_base_inertia(d)
        method = Method.BICYCLIC_TYPE_II
    except ClosedFormUnavailable:
        base_part = inertia_oracle(core)
        method = Method.ORACLE_FALLBACK
    outside = forest_inertia(g.without(core.vertices))
    step = ReductionStep(ReductionRule.TYPE_II_CUT, removed=core.vertices, offset=base_part.pn)
    return SolveResult(base_part + outside, (method,), ReductionTrace((step,)))


def solve(g: WeightedGraph) -> SolveResult:
    """Structural inertia of any graph; components are solved independently
    and summed.  Components denser than bicyclic fall back to the oracle."""
    comps = connected_components(g)
    total = Inertia(0, 0, 0)
    methods: list[Method] = []
    steps: list[ReductionStep] = []
    if len(comps) > 1:
        steps.append(ReductionStep(ReductionRule.COMPONENT_SPLIT))
    for comp, kind in zip(comps, classify(g).components):
        if kind is ComponentClass.TREE:
            sub = SolveResult(forest_inertia(comp), (Method.FOREST,), ReductionTrace())
        elif kind is ComponentClass.UNICYCLIC:
            sub = solve_unicyclic(comp)
        elif kind is ComponentClass.BICYCLIC:
            sub = solve_bicyclic(comp)
        else:
            sub = SolveResult(inertia_oracle(comp), (Method.ORACLE_FALLBACK,), ReductionTrace())
        total = total + sub.inertia
        methods.extend(sub.methods)
        steps.extend(sub.trace.steps)
    return SolveResult(total, tuple(methods), ReductionTrace(tuple(steps)))


@dataclass(frozen=True)
class JoinDecision:
    """Which additive identity applies when a tree is edge-joined at ``u``.

    With ``u`` matched in the tree, the join splits as tree + rest; with ``u``
    mismatched it splits as tree + (rest plus u with its joining edges).
    """

    matched: bool
    tree_inertia: Inertia


def joining_decompose(t: WeightedGraph, u: str, rest: WeightedGraph, k: int) -> JoinDecision:
    """Decide the split for a k-joining of tree ``t`` at ``u`` to ``rest``."""
    if set(t.vertices) & set(rest.vertices):
        raise GraphError("join parts must be disjoint")
    if not 1 <= k <= rest.n:
        raise GraphError(f"join edge count {k} out of range 1..{rest.n}")
    return JoinDecision(matched=not is_mismatched(t, u), tree_inertia=forest_inertia(t))
