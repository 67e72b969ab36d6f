import itertools
import random
from fractions import Fraction

import pytest

from graph_inertia import (
    GraphError,
    Inertia,
    cycle_inertia,
    describe_base,
    forest_inertia,
    infinity_base_inertia,
    infinity_condition,
    infinity_inertia,
    inertia_oracle,
    theta_base_inertia,
    theta_inertia,
    two_core,
)
from graph_inertia.closed_forms import (
    INFINITY_TABLE,
    fold_cycle_weights,
    fold_path_weights,
    reduce_infinity_shape,
    reduce_theta_shape,
)
from graph_inertia.testgen import (
    GenSpec,
    build_cycle,
    build_infinity,
    build_theta,
    generate,
    infinity_branches,
    sample_cycle_weights,
    sample_infinity_weights,
    sample_theta_weights,
    theta_branches,
)


def test_forest_inertia_examples():
    p5 = generate(GenSpec("tree", 1, 0))  # K1
    assert forest_inertia(p5) == Inertia(0, 0, 1)
    from graph_inertia import parse_graph

    path5 = parse_graph("1 2 9\n2 3 1/2\n3 4 7\n4 5 1/3")
    assert forest_inertia(path5) == Inertia(2, 2, 1)
    isolated = parse_graph("vertices: a b c d")
    assert forest_inertia(isolated) == Inertia(0, 0, 4)


def test_forest_inertia_rejects_cycles():
    with pytest.raises(GraphError):
        forest_inertia(build_cycle([Fraction(1)] * 3))


@pytest.mark.parametrize("seed", range(15))
def test_forest_inertia_matches_oracle(seed):
    g = generate(GenSpec("forest", 5 + seed % 11, seed))
    assert forest_inertia(g) == inertia_oracle(g)


def test_cycle_inertia_examples():
    assert cycle_inertia([Fraction(1)] * 4) == Inertia(1, 1, 2)
    assert cycle_inertia([Fraction(2), 1, 1, 1]) == Inertia(2, 2, 0)
    rng = random.Random(1)
    assert cycle_inertia(sample_cycle_weights(6, rng)) == Inertia(3, 3, 0)
    assert cycle_inertia(sample_cycle_weights(7, rng)) == Inertia(3, 4, 0)
    assert cycle_inertia(sample_cycle_weights(3, rng)) == Inertia(1, 2, 0)
    assert cycle_inertia(sample_cycle_weights(5, rng)) == Inertia(3, 2, 0)


def test_cycle_inertia_errors():
    with pytest.raises(GraphError):
        cycle_inertia([Fraction(1)] * 2)


@pytest.mark.parametrize("n", range(3, 17))
def test_cycle_inertia_matches_oracle(n):
    rng = random.Random(n)
    for trial in range(6):
        branch = "eq" if n % 4 == 0 and trial % 2 == 0 else None
        ws = sample_cycle_weights(n, rng, branch=branch)
        assert cycle_inertia(ws) == inertia_oracle(build_cycle(ws))


@pytest.mark.parametrize("n", [5, 6, 7, 9, 10, 11])
def test_cycle_inertia_weight_invariant_off_residue_zero(n):
    rng = random.Random(n * 7)
    results = {cycle_inertia(sample_cycle_weights(n, rng)) for _ in range(10)}
    assert len(results) == 1


# ---------------------------------------------------------------- infinity


def test_table_fixed_rows():
    rng = random.Random(0)
    a, b, c = sample_infinity_weights(3, 1, 3, rng)
    assert infinity_inertia(3, 1, 3, a, b, c).pn == (2, 3)
    a, b, c = sample_infinity_weights(5, 1, 5, rng)
    assert infinity_inertia(5, 1, 5, a, b, c).pn == (5, 4)
    a, b, c = sample_infinity_weights(5, 5, 5, rng)
    assert infinity_inertia(5, 5, 5, a, b, c).pn == (7, 6)
    a, b, c = sample_infinity_weights(3, 2, 3, rng, branch="eq")
    assert infinity_inertia(3, 2, 3, a, b, c).pn == (2, 3)


def test_every_table_row_and_branch_vs_oracle():
    rng = random.Random(42)
    for (p, l, q), row in INFINITY_TABLE.items():
        for key, expected in row.outcomes:
            branch = None if key == "any" else key
            for _ in range(4):
                a, b, c = sample_infinity_weights(p, l, q, rng, branch=branch)
                cond = infinity_condition(p, l, q, a, b, c)
                if branch is not None:
                    assert cond.relation == branch
                closed = infinity_inertia(p, l, q, a, b, c)
                got = inertia_oracle(build_infinity(p, l, q, a, b, c))
                assert closed == got
                assert closed.pn == expected


@pytest.mark.parametrize("p,q", [(3, 4), (3, 6), (4, 4), (4, 5), (4, 6), (5, 6), (6, 6)])
@pytest.mark.parametrize("l", range(1, 6))
def test_infinity_joined_cycle_cases_vs_oracle(p, q, l):
    rng = random.Random(p * 100 + q * 10 + l)
    branches = list(infinity_branches(p, l, q)) or [None]
    for branch in branches:
        for _ in range(4):
            a, b, c = sample_infinity_weights(p, l, q, rng, branch=branch)
            assert infinity_inertia(p, l, q, a, b, c) == inertia_oracle(
                build_infinity(p, l, q, a, b, c)
            )


def test_infinity_mod4_example():
    # one extra 4-block on the first cycle adds exactly (2, 2)
    unit = [Fraction(1)]
    a, b, c = unit * 7, unit * 3, []
    assert infinity_inertia(7, 1, 3, a, b, c) == Inertia(4, 5, 0)


@pytest.mark.parametrize("seed", range(30))
def test_infinity_mod4_general(seed):
    rng = random.Random(seed)
    p0, q0 = rng.choice([(3, 3), (3, 5), (5, 5), (3, 4), (4, 6), (5, 6)])
    l0 = rng.randint(1, 5)
    k, s = rng.randint(0, 2), rng.randint(0, 2)
    t = rng.randint(0, 2) if l0 > 1 else 0
    p, q, l = p0 + 4 * k, q0 + 4 * s, l0 + 4 * t
    a, b, c = sample_infinity_weights(p, l, q, rng)
    big = inertia_oracle(build_infinity(p, l, q, a, b, c))
    (rp, rl, rq, ra, rb, rc), folds = reduce_infinity_shape(p, l, q, a, b, c)
    assert (rp, rl, rq) == (p0, l0, q0)
    assert folds == k + s + t
    small = inertia_oracle(build_infinity(rp, rl, rq, ra, rb, rc))
    assert big.pn == (small.pos + 2 * folds, small.neg + 2 * folds)
    assert infinity_inertia(p, l, q, a, b, c) == big


def test_infinity_base_inertia_via_descriptor():
    rng = random.Random(7)
    a, b, c = sample_infinity_weights(3, 3, 5, rng, branch="lt")
    g = build_infinity(3, 3, 5, a, b, c)
    d = describe_base(two_core(g))
    assert infinity_base_inertia(d) == inertia_oracle(g)


def test_infinity_validation():
    with pytest.raises(GraphError):
        infinity_inertia(2, 1, 3, [1, 1], [1, 1, 1], [])
    with pytest.raises(GraphError):
        infinity_inertia(3, 2, 3, [1, 1, 1], [1, 1, 1], [])


# ---------------------------------------------------------------- theta


def _theta_rep_shapes():
    shapes = set()
    for sizes in itertools.product(range(2, 7), repeat=3):
        s = tuple(sorted(sizes))
        if s.count(2) > 1:
            continue
        if 6 in s and not (s[0] == 2 and s[2] == 6):
            continue
        shapes.add(s)
    return sorted(shapes)


@pytest.mark.parametrize("shape", _theta_rep_shapes())
def test_theta_representatives_vs_oracle(shape):
    p, l, q = shape
    rng = random.Random(sum(shape) * 31)
    branches = list(theta_branches(p, l, q)) or [None]
    for branch in branches:
        for _ in range(5):
            a, b, c = sample_theta_weights(p, l, q, rng, branch=branch)
            assert theta_inertia(p, l, q, a, b, c) == inertia_oracle(
                build_theta(p, l, q, a, b, c)
            )


def test_theta_fixed_cases():
    rng = random.Random(5)
    a, b, c = sample_theta_weights(2, 3, 5, rng)
    assert theta_inertia(2, 3, 5, a, b, c).pn == (3, 3)
    a, b, c = sample_theta_weights(3, 4, 5, rng)
    assert theta_inertia(3, 4, 5, a, b, c).pn == (4, 4)
    # direct-edge product dominating pushes negative here
    a, b, c = sample_theta_weights(2, 3, 4, rng, branch="gt")
    assert theta_inertia(2, 3, 4, a, b, c).pn == (2, 3)
    # the twin-3 equal branch turns theta(3,3,4) into a 5-cycle
    a, b, c = sample_theta_weights(3, 3, 4, rng, branch="eq")
    assert theta_inertia(3, 3, 4, a, b, c).pn == (3, 2)
    # theta(4,4,3) with unit weights: folded 5-cycle, one level up
    unit = [Fraction(1)] * 3
    assert theta_inertia(3, 4, 4, [Fraction(1)] * 2, unit, unit).pn == (4, 3)


def test_theta_2_4_5_strict_branches_follow_oracle():
    # the strict branches of this case run opposite to its q=3 sibling
    rng = random.Random(11)
    for branch, expected in (("gt", (4, 3)), ("eq", (3, 3)), ("lt", (3, 4))):
        a, b, c = sample_theta_weights(2, 4, 5, rng, branch=branch)
        got = theta_inertia(2, 4, 5, a, b, c)
        assert got.pn == expected
        assert got == inertia_oracle(build_theta(2, 4, 5, a, b, c))


@pytest.mark.parametrize("seed", range(30))
def test_theta_mod4_general(seed):
    rng = random.Random(seed + 500)
    while True:
        base = sorted(rng.randint(2, 5) for _ in range(3))
        if base.count(2) <= 1:
            break
    ks = [rng.randint(0, 2) for _ in range(3)]
    sizes = sorted(base[i] + 4 * ks[i] for i in range(3))
    p, l, q = sizes
    a, b, c = sample_theta_weights(p, l, q, rng)
    big = inertia_oracle(build_theta(p, l, q, a, b, c))
    slots, folds = reduce_theta_shape(p, l, q, a, b, c)
    assert folds == sum(ks)
    rebuilt = build_theta(
        slots[0][0], slots[1][0], slots[2][0], slots[0][1], slots[1][1], slots[2][1]
    )
    small = inertia_oracle(rebuilt)
    assert big.pn == (small.pos + 2 * folds, small.neg + 2 * folds)
    assert theta_inertia(p, l, q, a, b, c) == big


def test_theta_blocked_two_goes_to_six():
    # both long slots are ~2 mod 4; only one may land on 2
    rng = random.Random(3)
    a, b, c = sample_theta_weights(3, 6, 6, rng)
    slots, folds = reduce_theta_shape(3, 6, 6, a, b, c)
    assert [s for s, _ in slots] == [2, 3, 6]
    assert folds == 1
    assert theta_inertia(3, 6, 6, a, b, c) == inertia_oracle(build_theta(3, 6, 6, a, b, c))


def test_theta_base_inertia_via_descriptor():
    rng = random.Random(13)
    a, b, c = sample_theta_weights(3, 3, 5, rng, branch="eq")
    g = build_theta(3, 3, 5, a, b, c)
    d = describe_base(two_core(g))
    assert theta_base_inertia(d) == inertia_oracle(g)


def test_theta_validation():
    with pytest.raises(GraphError):
        theta_inertia(2, 2, 3, [1], [1], [1, 1])
    with pytest.raises(GraphError):
        theta_inertia(3, 3, 3, [1], [1, 1], [1, 1])


# ---------------------------------------------------------------- folding helpers


def test_fold_helpers():
    ws = [Fraction(x) for x in (1, 2, 3, 4, 5, 6, 7, 8)]
    folded = fold_cycle_weights(ws, 1)
    assert folded[0] == Fraction(15, 8)
    assert folded[1:] == (6, 7, 8)
    with pytest.raises(GraphError):
        fold_cycle_weights([Fraction(1)] * 6, 1)
    assert fold_path_weights([Fraction(1)] * 5, 1) == (Fraction(1),)
