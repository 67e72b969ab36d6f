import random
from fractions import Fraction

import pytest

from graph_inertia import (
    GraphError,
    Inertia,
    ReductionRule,
    contract_degree2_path,
    delete_pendant_pair,
    inertia_oracle,
    max_matching_forest,
    parse_graph,
    reduce_to_core,
)
from graph_inertia.testgen import GenSpec, build_cycle, build_theta, generate


def test_pendant_pair_on_p2():
    g = parse_graph("a b 5")
    g2, step = delete_pendant_pair(g, "a")
    assert g2.n == 0
    assert step.offset == (1, 1)
    assert step.removed == ("a", "b")
    # hence In(P2) = (1, 1, 0)
    assert inertia_oracle(g) == Inertia(1, 1, 0)


def test_pendant_pair_on_p4_endpoint():
    g = parse_graph("1 2 1\n2 3 2\n3 4 3")
    g2, _ = delete_pendant_pair(g, "1")
    assert g2.vertices == ("3", "4")
    assert inertia_oracle(g) == Inertia(2, 2, 0)


def test_pendant_pair_on_star_leaf():
    g = parse_graph("c 1 1\nc 2 1\nc 3 1")
    g2, step = delete_pendant_pair(g, "1")
    assert g2.m == 0 and g2.n == 2
    assert inertia_oracle(g) == Inertia(1, 1, 2)


def test_pendant_pair_rejects_non_pendant():
    g = parse_graph("1 2 1\n2 3 2")
    with pytest.raises(GraphError, match="not pendant"):
        delete_pendant_pair(g, "2")


def test_contract_weight_formula():
    g = parse_graph("a b 1\nb c 2\nc d 3\nd e 4\ne f 5")
    g2, step = contract_degree2_path(g, ("a", "b", "c", "d", "e", "f"))
    assert step.added == (("a", "f", Fraction(15, 8)),)
    assert step.offset == (2, 2)
    assert g2.weight("a", "f") == Fraction(15, 8)
    assert step.removed == ("b", "c", "d", "e")


def test_contract_unit_weights():
    g = parse_graph("a b 1\nb c 1\nc d 1\nd e 1\ne f 1")
    g2, _ = contract_degree2_path(g, ("a", "b", "c", "d", "e", "f"))
    assert g2.weight("a", "f") == 1


def test_contract_c8_to_c4():
    c8 = build_cycle([Fraction(1)] * 8)
    path = tuple(f"v{i}" for i in range(6))
    g2, step = contract_degree2_path(c8, path)
    assert g2.n == 4 and g2.m == 4
    assert inertia_oracle(c8) == Inertia(3, 3, 2)
    assert inertia_oracle(g2) + Inertia(2, 2, 0) == inertia_oracle(c8)


def test_contract_refusals():
    c5 = build_cycle([Fraction(1)] * 5)
    with pytest.raises(GraphError, match="loop"):
        contract_degree2_path(c5, ("v0", "v1", "v2", "v3", "v4", "v0"))
    c6 = build_cycle([Fraction(1)] * 6)
    with pytest.raises(GraphError, match="parallel"):
        contract_degree2_path(c6, ("v0", "v1", "v2", "v3", "v4", "v5"))
    branched = parse_graph("a b 1\nb c 1\nc d 1\nd e 1\ne f 1\nc x 1")
    with pytest.raises(GraphError, match="degree"):
        contract_degree2_path(branched, ("a", "b", "c", "d", "e", "f"))


def test_reduce_pm_tree_to_empty():
    # perfect-matching tree: a path on 6 vertices
    g = parse_graph("1 2 1\n2 3 2\n3 4 3\n4 5 4\n5 6 5")
    reduced, trace = reduce_to_core(g)
    assert reduced.n == 0
    assert trace.offset == (3, 3)


def test_reduce_tree_offset_is_matching_number():
    for seed in range(20):
        t = generate(GenSpec("tree", 3 + seed % 10, seed))
        q = max_matching_forest(t)
        reduced, trace = reduce_to_core(t)
        assert trace.offset == (q, q)
        assert reduced.m == 0
        assert reduced.n == t.n - 2 * q


def test_reduce_c12_to_c4():
    c12 = build_cycle([Fraction(1)] * 12)
    reduced, trace = reduce_to_core(c12)
    assert reduced.n == 4 and reduced.m == 4
    assert trace.offset == (4, 4)
    assert inertia_oracle(c12) == inertia_oracle(reduced) + Inertia(4, 4, 0)


def test_reduce_theta333_is_fixpoint():
    g = build_theta(3, 3, 3, [1, 2], [3, 4], [5, 6])
    reduced, trace = reduce_to_core(g)
    assert trace.steps == ()
    assert reduced == g


def test_reduce_is_deterministic():
    g = generate(GenSpec("bicyclic", 14, 23))
    r1, t1 = reduce_to_core(g)
    r2, t2 = reduce_to_core(g)
    assert r1 == r2 and t1 == t2


def _replay_and_check(g):
    """Re-apply each traced step, checking the oracle offset and the weight rule."""
    reduced, trace = reduce_to_core(g)
    cur = g
    for step in trace.steps:
        before = inertia_oracle(cur)
        if step.rule is ReductionRule.PENDANT_PAIR:
            v, u = step.removed
            assert cur.degree(v) == 1
            cur, _ = delete_pendant_pair(cur, v)
        else:
            (x0, x5, w), = step.added
            path = (x0, *step.removed, x5)
            ws = [cur.weight(path[i], path[i + 1]) for i in range(5)]
            assert w == ws[0] * ws[2] * ws[4] / (ws[1] * ws[3])
            cur, _ = contract_degree2_path(cur, path)
        after = inertia_oracle(cur)
        assert (before.pos - after.pos, before.neg - after.neg) == step.offset
    assert cur == reduced
    return trace


@pytest.mark.parametrize("seed", range(20))
def test_reduce_steps_match_oracle(seed):
    rng = random.Random(seed)
    cls = rng.choice(["tree", "unicyclic", "bicyclic"])
    g = generate(GenSpec(cls, rng.randint(6, 13), seed))
    _replay_and_check(g)


def test_reduce_strictly_shrinks():
    g = generate(GenSpec("bicyclic", 16, 99))
    reduced, trace = reduce_to_core(g)
    n = g.n
    for step in trace.steps:
        assert len(step.removed) in (2, 4)
        n -= len(step.removed)
    assert n == reduced.n >= 0


def test_trace_serialization_format():
    g = parse_graph("a b 1\nb c 2")
    _, trace = reduce_to_core(g)
    line = trace.serialize().splitlines()[0]
    assert line.startswith("PendantPair removed=[")
    assert "offset=(+1,+1)" in line
    g2 = parse_graph("a b 1\nb c 2\nc d 3\nd e 4\ne f 5\nf g 6\ng a 7")  # C7
    _, trace2 = reduce_to_core(g2)
    assert "PathContract" in trace2.serialize()
    assert "added=[(" in trace2.serialize()
