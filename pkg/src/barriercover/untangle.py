"""Reorder a feasible solution's active sensors by pairwise interval swaps.

A crossing pair is two active sensors whose positions are in the opposite
order from their starting order.  When their intervals overlap (or touch),
swapping them inside the union of the two intervals fixes their order while
covering exactly the same part of the barrier, so coverage is preserved
swap by swap until the active set is order-preserving.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .model import (
    ActiveSet,
    InfeasibleError,
    Instance,
    ScalarLike,
    Solution,
    as_solution,
    is_order_preserving,
    minimal_active_set,
    verify_coverage,
)


@dataclass(frozen=True)
class CrossingPair:
    """Sensor indices i < j whose positions satisfy y_i > y_j."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not 0 <= self.i < self.j:
            raise ValueError("need 0 <= i < j")


def crossing_pairs(
    instance: Instance,
    solution: Sequence[ScalarLike],
    active: Sequence[int],
) -> tuple[CrossingPair, ...]:
    """All crossing pairs within the active set, overlapping or not."""
    y = as_solution(instance, solution)
    idx = sorted(active)
    return tuple(
        CrossingPair(a, b)
        for k, a in enumerate(idx)
        for b in idx[k + 1 :]
        if y[a] > y[b]
    )


def _union_span(instance: Instance, y: Solution, pair: CrossingPair):
    lo_i, hi_i = instance.sensors[pair.i].interval(y[pair.i])
    lo_j, hi_j = instance.sensors[pair.j].interval(y[pair.j])
    if lo_i > hi_j:  # y_i > y_j, so only this side can separate them
        return None
    return min(lo_i, lo_j), max(hi_i, hi_j)


def swap_pair(
    instance: Instance,
    solution: Sequence[ScalarLike],
    pair: CrossingPair,
) -> Solution:
    """Swap an overlapping crossing pair inside the union of its intervals.

    The lower-index sensor moves to the left end of the union and the other
    to the right end; the union (hence coverage) is unchanged and the pair
    ends up in order.  Raises if the pair is not crossing or not contiguous.
    """
    y = as_solution(instance, solution)
    if not y[pair.i] > y[pair.j]:
        raise ValueError(f"pair {pair} is not crossing under this solution")
    span = _union_span(instance, y, pair)
    if span is None:
        raise ValueError(f"pair {pair} has disjoint intervals; swap would tear them")
    u1, u2 = span
    out = list(y)
    out[pair.i] = u1 + instance.sensors[pair.i].r
    out[pair.j] = u2 - instance.sensors[pair.j].r
    return tuple(out)


def untangle(
    instance: Instance,
    solution: Sequence[ScalarLike],
) -> tuple[Solution, ActiveSet]:
    """Swap crossing overlapping pairs until the active set is in order.

    Schedule: always swap the pair whose interval union starts leftmost;
    after each swap the active set is re-minimized (within itself) and any
    sensor dropped as redundant returns to its starting position.  Coverage
    is checked after every swap, and a run is bounded by n^2 swaps; either
    failing is a schedule bug, not a property of the input.
    """
    y = as_solution(instance, solution)
    if not verify_coverage(instance, y).covered:
        raise InfeasibleError("cannot untangle a solution that does not cover")

    def reset_outside(y: Solution, active: ActiveSet) -> Solution:
        keep = set(active)
        return tuple(
            yi if i in keep else instance.sensors[i].x for i, yi in enumerate(y)
        )

    active = minimal_active_set(instance, y)
    y = reset_outside(y, active)
    last: Optional[CrossingPair] = None
    for _ in range(instance.n * instance.n + 1):
        crossings = crossing_pairs(instance, y, active)
        if not crossings:
            break
        swappable = []
        for pair in crossings:
            span = _union_span(instance, y, pair)
            if span is not None:
                swappable.append((span, pair))
        if not swappable:
            raise RuntimeError("crossing pairs remain but none overlap; schedule bug")
        _, pair = min(swappable, key=lambda item: (item[0], item[1].i, item[1].j))
        if pair == last:
            raise RuntimeError(f"pair {pair} selected twice in a row; schedule bug")
        last = pair
        y = swap_pair(instance, y, pair)
        if not verify_coverage(instance, y, active).covered:
            raise RuntimeError(f"swap of {pair} broke coverage; swap rule bug")
        active = minimal_active_set(instance, y, within=active)
        y = reset_outside(y, active)
    else:
        raise RuntimeError("untangling exceeded its n^2 swap bound")
    if not is_order_preserving(instance, y, active):
        raise RuntimeError("untangling finished with an out-of-order active set")
    return y, active
