import random
from fractions import Fraction

import pytest

from graph_inertia import GraphClass, GraphError, classify, infinity_condition
from graph_inertia.testgen import (
    GenSpec,
    build_theta,
    generate,
    infinity_branches,
    sample_cycle_weights,
    sample_infinity_weights,
    sample_theta_weights,
    theta_branches,
)


def test_generate_is_deterministic():
    spec = GenSpec("bicyclic", 12, 424242, regime="force")
    assert generate(spec) == generate(spec)
    assert generate(spec) != generate(GenSpec("bicyclic", 12, 424243, regime="force"))


def test_generate_trivial_shapes():
    k1 = generate(GenSpec("tree", 1, 0))
    assert k1.n == 1 and k1.m == 0
    c3 = generate(GenSpec("unicyclic", 3, 5))
    assert c3.n == 3 and c3.m == 3


@pytest.mark.parametrize("cls,overall,lo", [
    ("tree", GraphClass.TREE, 2),
    ("unicyclic", GraphClass.UNICYCLIC, 3),
    ("bicyclic", GraphClass.BICYCLIC, 6),
])
@pytest.mark.parametrize("seed", range(12))
def test_generate_hits_requested_class_and_size(cls, overall, lo, seed):
    n = lo + seed
    g = generate(GenSpec(cls, n, seed))
    assert g.n == n
    assert classify(g).overall is overall


@pytest.mark.parametrize("seed", range(8))
def test_generate_forest(seed):
    g = generate(GenSpec("forest", 9, seed))
    assert g.n == 9
    assert classify(g).overall in (GraphClass.TREE, GraphClass.FOREST, GraphClass.EMPTY_EDGE_SET_FOREST)


def test_generate_unit_regime():
    g = generate(GenSpec("bicyclic", 9, 3, regime="unit"))
    assert all(w == 1 for _, _, w in g.edges)


def test_generate_infeasible_spec():
    with pytest.raises(GraphError):
        generate(GenSpec("unicyclic", 2, 0))
    with pytest.raises(GraphError):
        generate(GenSpec("bicyclic", 3, 0))
    with pytest.raises(GraphError):
        generate(GenSpec("hypercube", 8, 0))


def test_cycle_weight_forcing():
    rng = random.Random(1)
    ws = sample_cycle_weights(8, rng, branch="eq")
    odd = even = Fraction(1)
    for i, w in enumerate(ws):
        if i % 2 == 0:
            odd *= w
        else:
            even *= w
    assert odd == even
    ws = sample_cycle_weights(8, rng, branch="neq")
    assert ws[0::2] != ws[1::2]
    with pytest.raises(GraphError):
        sample_cycle_weights(7, rng, branch="eq")


@pytest.mark.parametrize("shape", [(3, 2, 3), (3, 4, 3), (3, 1, 5), (3, 3, 5), (3, 5, 5), (5, 2, 5), (5, 4, 5)])
@pytest.mark.parametrize("branch", ["gt", "eq", "lt"])
def test_infinity_forcing_hits_requested_relation(shape, branch):
    p, l, q = shape
    rng = random.Random(p * l * q)
    for _ in range(5):
        a, b, c = sample_infinity_weights(p, l, q, rng, branch=branch)
        assert infinity_condition(p, l, q, a, b, c).relation == branch
        assert all(w > 0 for w in a + b + c)


def test_theta_forcing_produces_positive_weights():
    rng = random.Random(77)
    for shape in [(2, 3, 3), (3, 3, 3), (2, 4, 4), (4, 4, 5), (5, 5, 5), (2, 4, 6), (2, 3, 4), (2, 4, 5)]:
        for branch in theta_branches(*shape) or (None,):
            a, b, c = sample_theta_weights(*shape, rng, branch=branch)
            assert all(w > 0 for w in a + b + c)
            build_theta(*shape, a, b, c)  # shape-valid


def test_branch_catalogs():
    assert infinity_branches(3, 2, 3) == ("gt", "eq", "lt")
    assert infinity_branches(3, 3, 3) == ()
    assert infinity_branches(4, 2, 5) == ("eq", "neq")
    assert theta_branches(3, 3, 4) == ("eq", "neq")
    assert theta_branches(2, 3, 5) == ()
    assert theta_branches(3, 4, 5) == ()


def test_forced_bicyclic_generation_covers_branches():
    # over a seed range, forced bicyclic generation hits many distinct branches
    seen = set()
    for seed in range(60):
        g = generate(GenSpec("bicyclic", 10, seed, regime="force"))
        assert classify(g).overall is GraphClass.BICYCLIC
        seen.add(g.edges[:2])
    assert len(seen) > 30
