"""Closed-form inertia of forests, cycles, and the small double-cycle bases.

Large cycle parameters reduce modulo 4: contracting a run of five edges whose
four interior vertices have degree 2 into one edge of weight
``w1*w3*w5/(w2*w4)`` costs exactly (2, 2) on the (positive, negative) pair, so
every base folds onto a bounded representative whose value is a table lookup
or a short case split.  Every branch here is cross-checked against the
congruence oracle by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import GraphError, Inertia
from .graph import WeightedGraph, connected_components
from .structure import BaseDescriptor, BaseKind, max_matching_forest

__all__ = [
    "ClosedFormUnavailable",
    "CaseCondition",
    "InfinityRow",
    "INFINITY_TABLE",
    "forest_inertia",
    "cycle_inertia",
    "infinity_condition",
    "infinity_inertia",
    "infinity_base_inertia",
    "theta_inertia",
    "theta_base_inertia",
    "fold_cycle_weights",
    "fold_path_weights",
    "reduce_infinity_shape",
    "reduce_theta_shape",
]


class ClosedFormUnavailable(GraphError):
    """No stated closed form covers this base representative."""


@dataclass(frozen=True)
class CaseCondition:
    """A decided weight condition: two positive products and their order."""

    lhs: Fraction
    rhs: Fraction

    @property
    def relation(self) -> str:
        if self.lhs > self.rhs:
            return "gt"
        if self.lhs == self.rhs:
            return "eq"
        return "lt"


def forest_inertia(g: WeightedGraph) -> Inertia:
    """(q, q, n - 2q) for acyclic graphs, q the matching number; weights never matter."""
    if g.m != g.n - len(connected_components(g)):
        raise GraphError("forest_inertia requires an acyclic graph")
    q = max_matching_forest(g)
    return Inertia(q, q, g.n - 2 * q)


def cycle_inertia(weights: Sequence[Fraction]) -> Inertia:
    """Inertia of a weighted cycle from its length and, when the length is
    divisible by 4, the comparison of its two alternating edge-weight products."""
    n = len(weights)
    if n < 3:
        raise GraphError("a cycle needs at least 3 edges")
    r = n % 4
    if r == 0:
        odd = Fraction(1)
        even = Fraction(1)
        for i, w in enumerate(weights):
            if i % 2 == 0:
                odd *= w
            else:
                even *= w
        if odd == even:
            return Inertia(n // 2 - 1, n // 2 - 1, 2)
        return Inertia(n // 2, n // 2, 0)
    if r == 1:
        return Inertia((n + 1) // 2, (n - 1) // 2, 0)
    if r == 2:
        return Inertia(n // 2, n // 2, 0)
    return Inertia((n - 1) // 2, (n + 1) // 2, 0)


def _path_pn(m: int) -> tuple[int, int]:
    # a path on m vertices has matching number floor(m/2)
    return (m // 2, m // 2)


def _cycle_pn(ws: Sequence[Fraction]) -> tuple[int, int]:
    return cycle_inertia(tuple(ws)).pn


def _tadpole_pn(cycle_ws: Sequence[Fraction], tail_ws: Sequence[Fraction]) -> tuple[int, int]:
    """Cycle with a pendant path of ``len(tail_ws)`` edges at one vertex.

    An odd tail matches the junction into its own path, splitting off the
    cycle-minus-junction path; an even tail leaves the cycle intact.
    """
    t = len(tail_ws)
    if t == 0:
        return _cycle_pn(cycle_ws)
    if t % 2 == 1:
        half = (t + 1) // 2 + (len(cycle_ws) - 1) // 2
        return (half, half)
    cp, cn = _cycle_pn(cycle_ws)
    return (t // 2 + cp, t // 2 + cn)


# ---------------------------------------------------------------------------
# five-edge run contraction (weight folding for the mod-4 reductions)


def _fold_once(ws: list[Fraction]) -> Fraction:
    return ws[0] * ws[2] * ws[4] / (ws[1] * ws[3])


def fold_cycle_weights(ws: Sequence[Fraction], times: int) -> tuple[Fraction, ...]:
    """Contract ``times`` five-edge runs of a cycle, folding from the junction.

    Each contraction shortens the cycle by 4 and contributes (2, 2) to the
    caller's inertia offset.  The cycle must stay at least a triangle.
    """
    out = list(ws)
    for _ in range(times):
        if len(out) < 7:
            raise GraphError("cycle too short to contract while staying simple")
        out = [_fold_once(out)] + out[5:]
    return tuple(out)


def fold_path_weights(ws: Sequence[Fraction], times: int) -> tuple[Fraction, ...]:
    """Contract ``times`` five-edge runs of an internally degree-2 path."""
    out = list(ws)
    for _ in range(times):
        if len(out) < 5:
            raise GraphError("path too short to contract")
        out = [_fold_once(out)] + out[5:]
    return tuple(out)


# ---------------------------------------------------------------------------
# infinity bases


@dataclass(frozen=True)
class InfinityRow:
    """One representative row of the infinity case table."""

    shape: tuple[int, int, int]
    outcomes: tuple[tuple[str, tuple[int, int]], ...]
    condition_text: str | None = None

    def outcome(self, key: str) -> tuple[int, int]:
        return dict(self.outcomes)[key]


INFINITY_TABLE: dict[tuple[int, int, int], InfinityRow] = {
    row.shape: row
    for row in (
        InfinityRow((3, 1, 3), (("any", (2, 3)),)),
        InfinityRow(
            (3, 2, 3),
            (("gt", (2, 4)), ("eq", (2, 3)), ("lt", (3, 3))),
            "4*a1*b1*a3*b3/(a2*b2) - c1^2",
        ),
        InfinityRow((3, 3, 3), (("any", (3, 4)),)),
        InfinityRow(
            (3, 4, 3),
            (("gt", (3, 5)), ("eq", (3, 4)), ("lt", (4, 4))),
            "4*a1*b1*a3*b3/(a2*b2)*c2^2 - c1^2*c3^2",
        ),
        InfinityRow((3, 5, 3), (("any", (4, 5)),)),
        InfinityRow(
            (3, 1, 5),
            (("gt", (3, 4)), ("eq", (3, 3)), ("lt", (4, 3))),
            "a1*a3/a2 - b1*b3*b5/(b2*b4)",
        ),
        InfinityRow((3, 2, 5), (("any", (4, 4)),)),
        InfinityRow(
            (3, 3, 5),
            (("gt", (4, 5)), ("eq", (4, 4)), ("lt", (5, 4))),
            "a1*a3/a2*c2^2 - b1*b3*b5/(b2*b4)*c1^2",
        ),
        InfinityRow((3, 4, 5), (("any", (5, 5)),)),
        InfinityRow(
            (3, 5, 5),
            (("gt", (5, 6)), ("eq", (5, 5)), ("lt", (6, 5))),
            "a1*a3/a2*c2^2*c4^2 - b1*b3*b5/(b2*b4)*c1^2*c3^2",
        ),
        InfinityRow((5, 1, 5), (("any", (5, 4)),)),
        InfinityRow(
            (5, 2, 5),
            (("gt", (6, 4)), ("eq", (5, 4)), ("lt", (5, 5))),
            "4*a1*b1*a3*b3*a5*b5/(a2*b2*a4*b4) - c1^2",
        ),
        InfinityRow((5, 3, 5), (("any", (6, 5)),)),
        InfinityRow(
            (5, 4, 5),
            (("gt", (7, 5)), ("eq", (6, 5)), ("lt", (6, 6))),
            "4*a1*b1*a3*b3*a5*b5/(a2*b2*a4*b4)*c2^2 - c1^2*c3^2",
        ),
        InfinityRow((5, 5, 5), (("any", (7, 6)),)),
    )
}


def _alternating_term(ws: Sequence[Fraction]) -> Fraction:
    """Product of even-position weights over odd-position ones."""
    num = Fraction(1)
    den = Fraction(1)
    for i, w in enumerate(ws):
        if i % 2 == 0:
            num *= w
        else:
            den *= w
    return num / den


def infinity_condition(
    p: int, l: int, q: int, a: Sequence[Fraction], b: Sequence[Fraction], c: Sequence[Fraction]
) -> CaseCondition | None:
    """Decided weight condition of a conditioned table row, else None.

    The p-side product pairs with the even-numbered connector weights squared
    and the q-side with the odd-numbered ones (orientation: c1 sits at the
    p-junction); rows with p == q carry a factor 4 on the left.
    """
    row = INFINITY_TABLE.get((p, l, q))
    if row is None or row.condition_text is None:
        return None
    lhs = _alternating_term(a)
    rhs = _alternating_term(b)
    if p == q:
        lhs = 4 * lhs * rhs
        rhs = Fraction(1)
    for i, w in enumerate(c):
        if i % 2 == 1:
            lhs *= w * w
        else:
            rhs *= w * w
    return CaseCondition(lhs, rhs)


def reduce_infinity_shape(p, l, q, a, b, c):
    """Fold an infinity shape onto its representative (p, q in [3,6], l in [1,5]).

    Returns ``((p0, l0, q0, a0, b0, c0), folds)``; the inertia offset is
    ``(2 * folds, 2 * folds)``.  A connector length l == 1 (shared junction)
    never folds; l > 1 keeps at least a direct junction-junction edge.
    """
    p0 = 3 + (p - 3) % 4
    q0 = 3 + (q - 3) % 4
    if l == 1:
        l0 = 1
    else:
        l0 = 2 + (l - 2) % 4
    k = (p - p0) // 4
    s = (q - q0) // 4
    t = (l - l0) // 4
    return (
        (p0, l0, q0, fold_cycle_weights(a, k), fold_cycle_weights(b, s), fold_path_weights(c, t)),
        k + s + t,
    )


def _removed_cycle_rest_pn(l, other_cycle_ws, conn_ws):
    """(pos, neg) of the base minus one whole cycle (junction included).

    ``conn_ws`` runs from the deleted junction toward the surviving one.
    """
    if l == 1:
        return _path_pn(len(other_cycle_ws) - 1)
    tail = tuple(reversed(conn_ws[1:]))
    return _tadpole_pn(other_cycle_ws, tail)


def _infinity_rep_pn(p, l, q, a, b, c):
    if p > q:
        p, q, a, b = q, p, b, a
        c = tuple(reversed(c))
    if q == 6:
        # A 6-cycle always detaches with offset (3, 3), whatever its weights.
        r = _removed_cycle_rest_pn(l, a, tuple(reversed(c)))
        return (3 + r[0], 3 + r[1])
    if q == 4:
        if b[0] * b[2] == b[1] * b[3]:
            r = _cycle_pn(a) if l == 1 else _tadpole_pn(a, c)
            return (1 + r[0], 1 + r[1])
        r = _removed_cycle_rest_pn(l, a, tuple(reversed(c)))
        return (2 + r[0], 2 + r[1])
    if p == 4:
        if a[0] * a[2] == a[1] * a[3]:
            r = _cycle_pn(b) if l == 1 else _tadpole_pn(b, tuple(reversed(c)))
            return (1 + r[0], 1 + r[1])
        r = _removed_cycle_rest_pn(l, b, c)
        return (2 + r[0], 2 + r[1])
    row = INFINITY_TABLE[(p, l, q)]
    cond = infinity_condition(p, l, q, a, b, c)
    return row.outcome("any" if cond is None else cond.relation)


def infinity_inertia(p, l, q, a, b, c) -> Inertia:
    """Closed-form inertia of a bare infinity base on p + q + l - 2 vertices."""
    if p < 3 or q < 3 or l < 1:
        raise GraphError(f"infinity({p},{l},{q}) is not a valid shape")
    if (len(a), len(b), len(c)) != (p, q, l - 1):
        raise GraphError("weight sequence lengths must be (p, q, l-1)")
    n = p + q + l - 2
    (p0, l0, q0, a0, b0, c0), folds = reduce_infinity_shape(p, l, q, a, b, c)
    pos, neg = _infinity_rep_pn(p0, l0, q0, a0, b0, c0)
    pos += 2 * folds
    neg += 2 * folds
    return Inertia(pos, neg, n - pos - neg)


def infinity_base_inertia(d: BaseDescriptor) -> Inertia:
    if d.kind is not BaseKind.INFINITY:
        raise GraphError(f"descriptor is {d.kind.value}, not infinity")
    return infinity_inertia(d.p, d.l, d.q, d.a, d.b, d.c)


# ---------------------------------------------------------------------------
# theta bases


def reduce_theta_shape(p, l, q, a, b, c):
    """Fold a theta shape onto its representative (slots in [2,5], or 6 when a
    second slot would otherwise hit 2 and break simplicity).

    Slots are returned sorted; the inertia offset is ``(2*folds, 2*folds)``.
    """
    slots = sorted([(p, tuple(a)), (l, tuple(b)), (q, tuple(c))])
    out: list[tuple[int, tuple[Fraction, ...]]] = []
    folds = 0
    for size, seq in slots:
        target = 2 + (size - 2) % 4
        if target == 2 and size != 2 and any(s == 2 for s, _ in out):
            target = 6
        k = (size - target) // 4
        out.append((target, fold_path_weights(seq, k)))
        folds += k
    out.sort()
    return out, folds


def _theta_rep_pn(slots):
    (p, a), (l, b), (q, c) = slots
    sizes = (p, l, q)

    def twins(size):
        idx = [i for i in range(3) if slots[i][0] == size]
        if len(idx) < 2:
            return None
        other = next(i for i in range(3) if i not in idx[:2])
        return slots[idx[0]][1], slots[idx[1]][1], slots[other]

    if p == 2 and q == 6:
        # The five-edge path folds onto the parallel direct hub edge by
        # weight addition, leaving a cycle through the remaining path.
        folded = a[0] + c[0] * c[2] * c[4] / (c[1] * c[3])
        r = _cycle_pn((folded, *reversed(b)))
        return (2 + r[0], 2 + r[1])
    pair = twins(3)
    if pair:
        A, B, (ts, C) = pair
        if A[0] * B[1] == A[1] * B[0]:
            return _cycle_pn((A[0], A[1], *reversed(C)))
        r = _path_pn(ts - 2)
        return (2 + r[0], 2 + r[1])
    pair = twins(4)
    if pair:
        A, B, (ts, C) = pair
        folded = A[2] + B[0] * A[1] * B[2] / (A[0] * B[1])
        r = _cycle_pn((A[0], A[1], folded, *reversed(C)))
        return (1 + r[0], 1 + r[1])
    pair = twins(5)
    if pair:
        A, B, (ts, C) = pair
        if A[0] * B[1] * A[2] * B[3] == B[0] * A[1] * B[2] * A[3]:
            r = _cycle_pn((*A, *reversed(C)))
            return (1 + r[0], 1 + r[1])
        r = _path_pn(ts + 2)
        return (2 + r[0], 2 + r[1])
    if sizes == (2, 3, 4):
        cond = CaseCondition(a[0] * c[1], c[0] * c[2])
        return {"gt": (2, 3), "eq": (2, 2), "lt": (3, 2)}[cond.relation]
    if sizes == (2, 4, 5):
        cond = CaseCondition(a[0] * b[1], b[0] * b[2])
        # Strict branches verified against the oracle (the printed case table
        # transposes them): a bigger direct-edge product pushes positive here.
        return {"gt": (4, 3), "eq": (3, 3), "lt": (3, 4)}[cond.relation]
    if sizes == (2, 3, 5):
        return (3, 3)
    if sizes == (3, 4, 5):
        return (4, 4)
    raise ClosedFormUnavailable(f"no closed form for theta{sizes}")


def theta_inertia(p, l, q, a, b, c) -> Inertia:
    """Closed-form inertia of a bare theta base on p + l + q - 4 vertices."""
    sizes = (p, l, q)
    if min(sizes) < 2 or sum(1 for s in sizes if s == 2) > 1:
        raise GraphError(f"theta({p},{l},{q}) is not a valid shape")
    if (len(a), len(b), len(c)) != (p - 1, l - 1, q - 1):
        raise GraphError("weight sequence lengths must be (p-1, l-1, q-1)")
    n = p + l + q - 4
    slots, folds = reduce_theta_shape(p, l, q, a, b, c)
    pos, neg = _theta_rep_pn(slots)
    pos += 2 * folds
    neg += 2 * folds
    return Inertia(pos, neg, n - pos - neg)


def theta_base_inertia(d: BaseDescriptor) -> Inertia:
    if d.kind is not BaseKind.THETA:
        raise GraphError(f"descriptor is {d.kind.value}, not theta")
    return theta_inertia(d.p, d.l, d.q, d.a, d.b, d.c)
