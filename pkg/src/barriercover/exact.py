"""Ground-truth solvers: exhaustive oracles and budget-parameterized branching.

Everything here requires the instance to sit on the integer grid (use
``model.integral_scale_factor`` / ``model.scale_instance`` first); integer
data admits integer-position optima, so searching the grid is exhaustive.
Internals run on plain ints for speed and convert back to Fractions at the
boundary.

The searches are depth-first with admissible pruning only (budget, current
incumbent, permanently wasted length, uncovered measure, reachability of
the leftmost hole), so results are exact; a node cap aborts with
``ResourceLimitError`` rather than ever reporting "no solution".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .model import (
    Instance,
    ResourceLimitError,
    Scalar,
    ScalarLike,
    Solution,
    as_scalar,
    is_feasible,
    verify_coverage,
)
from .order_dp import greedy_cover

DEFAULT_NODE_CAP = 10**8

_Span = tuple[int, int]


@dataclass(frozen=True)
class KMoveQuery:
    """Budget plus a bound on how many sensors may move at all."""

    budget: Scalar
    movers: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "budget", as_scalar(self.budget))
        if self.budget < 0:
            raise ValueError("budget must be >= 0")
        if self.movers < 0:
            raise ValueError("mover bound must be >= 0")


@dataclass(frozen=True)
class GapCandidateSet:
    """Sensors worth moving into one gap, keyed by their facing interval edge.

    ``left[p]`` lists sensors whose home right edge is the integer point p
    in [gap_lo - budget, gap_lo]; ``right[p]`` those whose home left edge
    is p in [gap_hi, gap_hi + budget].  Each point keeps only the budget+1
    longest sensors (ties to the lower index): with at most ``budget``
    movers, a discarded shorter sensor can be replaced at equal cost by a
    kept unmoved one, whose own home stays covered by a second kept one.
    """

    gap: tuple[Scalar, Scalar]
    left: dict[int, tuple[int, ...]]
    right: dict[int, tuple[int, ...]]

    def sensors(self) -> tuple[int, ...]:
        seen = {j for group in self.left.values() for j in group}
        seen |= {j for group in self.right.values() for j in group}
        return tuple(sorted(seen))


def _int_instance(instance: Instance) -> tuple[int, list[int], list[int]]:
    ok = instance.length.denominator == 1 and all(
        s.x.denominator == 1 and s.r.denominator == 1 for s in instance.sensors
    )
    if not ok:
        raise ValueError("integer-grid solver: scale the instance to integers first")
    return (
        int(instance.length),
        [int(s.x) for s in instance.sensors],
        [int(s.r) for s in instance.sensors],
    )


def _int_budget(budget: ScalarLike) -> int:
    b = as_scalar(budget)
    if b.denominator != 1 or b < 0:
        raise ValueError(f"budget must be a nonnegative integer, got {b}")
    return int(b)


def _merge(spans: Iterable[_Span]) -> list[_Span]:
    out: list[_Span] = []
    for lo, hi in sorted(spans):
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


def _gaps(length: int, spans: list[_Span]) -> list[_Span]:
    """Uncovered stretches of [0, length] w.r.t. merged spans."""
    gaps = []
    cursor = 0
    for lo, hi in spans:
        if hi < 0:
            continue
        if lo > length:
            break
        if lo > cursor:
            gaps.append((cursor, lo))
        cursor = max(cursor, min(hi, length))
        if cursor >= length:
            break
    if cursor < length:
        gaps.append((cursor, length))
    return gaps


def _uncovered_two(length: int, a: list[_Span], b: list[_Span]) -> tuple[int, int]:
    """Uncovered measure of [0, length] under two merged span lists.

    Returns (total uncovered, start of the first hole; -1 when covered).
    Walking both lists by a two-pointer sweep keeps the hot search loop free
    of sorting and list allocation.
    """
    cursor = 0
    total = 0
    first = -1
    ia = ib = 0
    na, nb = len(a), len(b)
    while cursor < length:
        while ia < na and a[ia][1] < cursor:
            ia += 1
        while ib < nb and b[ib][1] < cursor:
            ib += 1
        lo_a = a[ia][0] if ia < na else None
        lo_b = b[ib][0] if ib < nb else None
        if lo_a is not None and lo_a <= cursor:
            cursor = a[ia][1]
            ia += 1
            continue
        if lo_b is not None and lo_b <= cursor:
            cursor = b[ib][1]
            ib += 1
            continue
        nxt = length
        if lo_a is not None and lo_a < nxt:
            nxt = lo_a
        if lo_b is not None and lo_b < nxt:
            nxt = lo_b
        if first < 0:
            first = cursor
        total += nxt - cursor
        cursor = nxt
    return total, first


class _Search:
    """Incumbent bookkeeping for the depth-first enumerations."""

    def __init__(self, node_cap: int, budget: int) -> None:
        self.node_cap = node_cap
        self.budget = budget
        self.nodes = 0
        self.best_cost: Optional[int] = None
        self.best: Optional[list[int]] = None

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise ResourceLimitError(f"search explored more than {self.node_cap} states")

    def offer(self, cost_value: int, positions: list[int]) -> None:
        if self.best_cost is None or cost_value < self.best_cost:
            self.best_cost = cost_value
            self.best = list(positions)

    def bound(self) -> int:
        """Largest total cost still worth exploring."""
        if self.best_cost is None:
            return self.budget
        return min(self.budget, self.best_cost - 1)

    def result(self) -> Optional[tuple[Solution, Scalar]]:
        if self.best_cost is None or self.best_cost > self.budget:
            return None
        assert self.best is not None
        return tuple(Fraction(v) for v in self.best), Fraction(self.best_cost)


def _anchored_cover(length: int, xs: list[int], rs: list[int]) -> Optional[list[int]]:
    """Lazy right-to-left tiling: cover [0, L] anchored at the right end.

    Walking sensors in reverse order, each either already reaches the
    uncovered frontier from home or is pulled right to touch it.  A good
    incumbent for instances whose cheap solutions nudge sensors rightward.
    """
    y = list(xs)
    frontier = length
    for i in range(len(xs) - 1, -1, -1):
        if frontier <= 0:
            break
        if xs[i] - rs[i] > frontier:
            continue
        y[i] = max(xs[i], frontier - rs[i])
        frontier = y[i] - rs[i]
    if frontier > 0:
        return None
    return y


def brute_force(
    instance: Instance,
    budget: ScalarLike,
    node_cap: int = DEFAULT_NODE_CAP,
) -> Optional[tuple[Solution, Scalar]]:
    """Cheapest covering solution with integer movements summing to <= budget.

    Exhausts movement vectors (positions limited to the useful window
    [min(-r, x), max(L + r, x)]) with admissible pruning, so the returned
    cost is the exact optimum within the budget; None means no solution
    exists, never that the search gave up (that raises ResourceLimitError).
    """
    length, xs, rs = _int_instance(instance)
    limit = _int_budget(budget)
    n = len(xs)
    if not is_feasible(instance):
        return None

    suffix_home: list[list[_Span]] = [[] for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        suffix_home[i] = _merge(suffix_home[i + 1] + [(xs[i] - rs[i], xs[i] + rs[i])])
    slack = sum(2 * r for r in rs) - length
    # Previous sensor of the same radius: equal intervals may be assumed
    # uncrossed (swapping their targets never raises the cost), so the DFS
    # only emits position-monotone assignments within each radius class.
    class_prev = [-1] * n
    latest: dict[int, int] = {}
    for i, r in enumerate(rs):
        class_prev[i] = latest.get(r, -1)
        latest[r] = i

    search = _Search(node_cap, limit)
    greedy_y, greedy_cost = greedy_cover(instance)
    if greedy_cost.denominator == 1 and greedy_cost <= limit:
        search.offer(int(greedy_cost), [int(v) for v in greedy_y])
    anchored = _anchored_cover(length, xs, rs)
    if anchored is not None:
        a_cost = sum(abs(y - x) for y, x in zip(anchored, xs))
        if a_cost <= limit:
            search.offer(a_cost, anchored)

    positions = list(xs)

    def contribution(span: _Span, merged: list[_Span]) -> int:
        """Length ``span`` adds to the barrier beyond what ``merged`` covers."""
        lo, hi = max(span[0], 0), min(span[1], length)
        total = 0
        for mlo, mhi in merged:
            if mhi <= lo:
                continue
            if mlo >= hi:
                break
            if mlo > lo:
                total += mlo - lo
            lo = max(lo, mhi)
            if lo >= hi:
                break
        if hi > lo:
            total += hi - lo
        return total

    def min_reach(i: int, p: int, floors: dict[int, int]) -> Optional[int]:
        """Cheapest movement for any remaining sensor to cover [p, p+1].

        Respects the uncrossing floors: a sensor whose radius class already
        placed a member at position f may only take positions >= f.  None
        means no remaining sensor can ever cover the point: a dead branch.
        """
        best: Optional[int] = None
        for j in range(i, n):
            lo_y = p - rs[j]
            f = floors.get(rs[j])
            if f is not None:
                if f > p + rs[j]:
                    continue
                lo_y = max(lo_y, f)
            c = xs[j] - (p + rs[j])
            if lo_y - xs[j] > c:
                c = lo_y - xs[j]
            if c <= 0:
                return 0
            if best is None or c < best:
                best = c
        return best

    def rec(i: int, spent: int, placed: list[_Span], waste: int, floors: dict[int, int]) -> None:
        search.tick()
        uncovered, first_hole = _uncovered_two(length, placed, suffix_home[i])
        if i == n:
            if uncovered == 0:
                search.offer(spent, positions)
            return
        lower = uncovered
        if first_hole >= 0:
            reach = min_reach(i, first_hole, floors)
            if reach is None:
                return
            if reach > lower:
                lower = reach
        # A hole the suffix homes still cover can nevertheless be dead when
        # the uncrossing floors keep every remaining sensor to its right.
        _, placed_hole = _uncovered_two(length, placed, [])
        if placed_hole >= 0 and placed_hole != first_hole:
            reach = min_reach(i, placed_hole, floors)
            if reach is None:
                return
            if reach > lower:
                lower = reach
        bnd = search.bound()
        if spent + lower > bnd:
            return
        lo_pos = min(-rs[i], xs[i])
        hi_pos = max(length + rs[i], xs[i])
        floor = floors.get(rs[i])
        two_r = 2 * rs[i]
        d = 0
        while spent + d <= bnd:
            for y in ((xs[i],) if d == 0 else (xs[i] + d, xs[i] - d)):
                if y < lo_pos or y > hi_pos:
                    continue
                if floor is not None and y < floor:
                    continue
                span = (y - rs[i], y + rs[i])
                # Waste (overlap + off-barrier spill) only ever grows; more
                # than the global slack means no completion can cover.
                child_waste = waste + two_r - contribution(span, placed)
                if child_waste > slack:
                    continue
                positions[i] = y
                rec(i + 1, spent + d, _merge(placed + [span]), child_waste,
                    {**floors, rs[i]: y})
                positions[i] = xs[i]
            d += 1
            bnd = search.bound()

    rec(0, 0, [], 0, {})
    return search.result()


def brute_force_order_preserving(
    instance: Instance,
    budget: Optional[ScalarLike] = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> Optional[tuple[Solution, Scalar]]:
    """Cheapest order-preserving cover by enumerating increasing active chains.

    Independent check for the DP: walks sensors in index order, each either
    staying home (inactive) or joining the chain at an integer position that
    extends coverage without leaving a gap.  The budget defaults to the
    greedy tiling cost, which is always enough.
    """
    length, xs, rs = _int_instance(instance)
    n = len(xs)
    if not is_feasible(instance):
        return None
    if budget is None:
        _, upper = greedy_cover(instance)
        limit = math.ceil(upper)
    else:
        limit = _int_budget(budget)

    suffix_len = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_len[i] = suffix_len[i + 1] + 2 * rs[i]

    search = _Search(node_cap, limit)
    positions = list(xs)

    def rec(i: int, spent: int, reach: int, last_y: Optional[int]) -> None:
        search.tick()
        if reach >= length:
            search.offer(spent, positions)
            return
        if i == n or reach + suffix_len[i] < length:
            return
        rec(i + 1, spent, reach, last_y)  # sensor i stays home, inactive
        lo = reach - rs[i] + 1
        if last_y is not None:
            lo = max(lo, last_y + 1)
        for y in range(lo, reach + rs[i] + 1):
            move = abs(y - xs[i])
            if spent + move > search.bound():
                continue
            positions[i] = y
            rec(i + 1, spent + move, max(reach, y + rs[i]), y)
            positions[i] = xs[i]

    rec(0, 0, 0, None)
    return search.result()


def gap_candidates(
    instance: Instance,
    gap: tuple[ScalarLike, ScalarLike],
    budget: ScalarLike,
    exclude: Iterable[int] = (),
) -> GapCandidateSet:
    """Per-edge candidate groups for one gap (see GapCandidateSet)."""
    length, xs, rs = _int_instance(instance)
    limit = _int_budget(budget)
    gap_lo, gap_hi = as_scalar(gap[0]), as_scalar(gap[1])
    if gap_lo.denominator != 1 or gap_hi.denominator != 1:
        raise ValueError("gap endpoints must be integers on the scaled grid")
    banned = set(exclude)
    left: dict[int, list[int]] = {}
    right: dict[int, list[int]] = {}
    for j in range(len(xs)):
        if j in banned:
            continue
        edge = xs[j] + rs[j]
        if int(gap_lo) - limit <= edge <= int(gap_lo):
            left.setdefault(edge, []).append(j)
        edge = xs[j] - rs[j]
        if int(gap_hi) <= edge <= int(gap_hi) + limit:
            right.setdefault(edge, []).append(j)

    def trim(groups: dict[int, list[int]]) -> dict[int, tuple[int, ...]]:
        kept = {}
        for p, members in groups.items():
            members.sort(key=lambda j: (-rs[j], j))
            kept[p] = tuple(members[: limit + 1])
        return kept

    return GapCandidateSet(gap=(gap_lo, gap_hi), left=trim(left), right=trim(right))


def fpt_solve(
    instance: Instance,
    budget: ScalarLike,
    node_cap: int = DEFAULT_NODE_CAP,
) -> Optional[tuple[Solution, Scalar]]:
    """Budget-parameterized branching: who closes the leftmost gap, and where.

    A branch dies once its gaps total more than the remaining budget.
    Otherwise some still-unmoved sensor must cover the first unit of the
    leftmost gap (endpoints are integral, so an interval meeting the gap's
    interior covers that whole unit); we branch over that gap's candidate
    sensors — trimmed per edge group as in GapCandidateSet — and over every
    integer center covering the unit within the remaining budget.  Every
    move costs at least one unit, so the depth is bounded by the budget.
    """
    length, xs, rs = _int_instance(instance)
    limit = _int_budget(budget)
    n = len(xs)

    search = _Search(node_cap, limit)
    positions = list(xs)

    def rec(moved: frozenset[int], spent: int) -> None:
        search.tick()
        state = _merge([(positions[j] - rs[j], positions[j] + rs[j]) for j in range(n)])
        holes = _gaps(length, state)
        if not holes:
            search.offer(spent, positions)
            return
        room = search.bound() - spent
        if sum(hi - lo for lo, hi in holes) > room:
            return
        gap_lo, gap_hi = holes[0]
        groups = gap_candidates(instance, (gap_lo, gap_hi), room, exclude=moved)
        for j in groups.sensors():
            lo = max(gap_lo + 1 - rs[j], xs[j] - room)
            hi = min(gap_lo + rs[j], xs[j] + room)
            for y in range(lo, hi + 1):
                if y == xs[j]:
                    continue
                positions[j] = y
                rec(moved | {j}, spent + abs(y - xs[j]))
                positions[j] = xs[j]

    rec(frozenset(), 0)
    return search.result()


def kmove_brute_force(
    instance: Instance,
    query: KMoveQuery,
    state_cap: int = DEFAULT_NODE_CAP,
) -> Optional[Solution]:
    """Any covering solution moving at most k sensors at total cost <= budget.

    Enumerates mover subsets and, for each mover, integer positions in
    [-r, L + r]; refuses up front (resource error) when the state estimate
    blows past the cap.
    """
    length, xs, rs = _int_instance(instance)
    limit = _int_budget(query.budget)
    n = len(xs)
    k = min(query.movers, n)

    widest = max((length + 2 * r + 2 for r in rs), default=1)
    estimate = sum(math.comb(n, size) * widest**size for size in range(k + 1))
    if estimate > state_cap:
        raise ResourceLimitError(f"k-move estimate {estimate} exceeds cap {state_cap}")

    home = instance.home()
    if verify_coverage(instance, home).covered:
        return home

    for size in range(1, k + 1):
        for movers in combinations(range(n), size):

            def assign(idx: int, spent: int, current: list[int]) -> Optional[Solution]:
                if idx == size:
                    candidate = list(xs)
                    for j, y in zip(movers, current):
                        candidate[j] = y
                    sol = tuple(Fraction(v) for v in candidate)
                    if verify_coverage(instance, sol).covered:
                        return sol
                    return None
                j = movers[idx]
                for y in range(-rs[j], length + rs[j] + 1):
                    if y == xs[j]:
                        continue
                    step = abs(y - xs[j])
                    if spent + step > limit:
                        continue
                    found = assign(idx + 1, spent + step, current + [y])
                    if found is not None:
                        return found
                return None

            found = assign(0, 0, [])
            if found is not None:
                return found
    return None


def oracle_optimal(
    instance: Instance,
    node_cap: int = DEFAULT_NODE_CAP,
) -> Optional[tuple[Solution, Scalar]]:
    """Unrestricted optimum on the integer grid; None iff infeasible."""
    if not is_feasible(instance):
        return None
    _, upper = greedy_cover(instance)
    return brute_force(instance, math.ceil(upper), node_cap=node_cap)
