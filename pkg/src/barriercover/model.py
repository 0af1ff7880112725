"""Exact-arithmetic domain model for barrier coverage on a line.

A barrier is the segment [0, L].  Each sensor covers a closed interval of
radius r around a movable center; a solution assigns every sensor a new
center, and its cost is the total distance moved.  All coordinates are
`fractions.Fraction`, so coverage and cost comparisons are decided exactly;
nothing in this module (or its tests) may rely on floating-point tolerance.

All types are immutable values and all operations are pure functions, so
everything here is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Scalar = Fraction

ScalarLike = Union[Scalar, int, str]

#: Positions of all sensors, index-aligned with ``Instance.sensors``.
Solution = tuple[Scalar, ...]

#: Sorted sensor indices whose intervals alone cover the barrier.
ActiveSet = tuple[int, ...]


class InfeasibleError(Exception):
    """The barrier cannot be covered (or a covering solution was required)."""


class ResourceLimitError(Exception):
    """A search exceeded its configured resource cap; not a 'no solution'."""


def as_scalar(value: ScalarLike) -> Scalar:
    """Coerce to an exact rational; floats are refused to keep arithmetic exact."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int or 'p/q' string")
    return Fraction(value)


@dataclass(frozen=True)
class Sensor:
    """One mobile sensor: initial center ``x`` and fixed radius ``r > 0``."""

    x: Scalar
    r: Scalar

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", as_scalar(self.x))
        object.__setattr__(self, "r", as_scalar(self.r))
        if self.r <= 0:
            raise ValueError(f"sensor radius must be positive, got {self.r}")

    def interval(self, center: Optional[ScalarLike] = None) -> tuple[Scalar, Scalar]:
        """Closed interval covered when centered at ``center`` (default: home)."""
        c = self.x if center is None else as_scalar(center)
        return (c - self.r, c + self.r)


@dataclass(frozen=True)
class Instance:
    """A barrier ``[0, length]`` plus sensors, kept sorted by (x, r).

    The constructor normalizes: sensors are re-sorted (stably) so that index
    ``i`` always means position ``i`` in (x, r)-ascending order.
    """

    length: Scalar
    sensors: tuple[Sensor, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "length", as_scalar(self.length))
        if self.length < 0:
            raise ValueError(f"barrier length must be >= 0, got {self.length}")
        ordered = tuple(sorted(self.sensors, key=lambda s: (s.x, s.r)))
        object.__setattr__(self, "sensors", ordered)

    @property
    def n(self) -> int:
        return len(self.sensors)

    def home(self) -> Solution:
        """The no-movement solution."""
        return tuple(s.x for s in self.sensors)

    def total_coverage(self) -> Scalar:
        """Sum of all interval lengths, the most the sensors can ever cover."""
        return sum((2 * s.r for s in self.sensors), start=Fraction(0))


@dataclass(frozen=True)
class CoverageReport:
    """Result of checking a solution: covered flag plus all maximal gaps.

    Gaps are the open uncovered sub-intervals of [0, L], pairwise disjoint
    and sorted; ``covered`` holds exactly when there are none.
    """

    covered: bool
    gaps: tuple[tuple[Scalar, Scalar], ...]


def as_solution(instance: Instance, values: Iterable[ScalarLike]) -> Solution:
    """Coerce positions to Fractions, enforcing one position per sensor."""
    out = tuple(as_scalar(v) for v in values)
    if len(out) != instance.n:
        raise ValueError(f"expected {instance.n} positions, got {len(out)}")
    return out


def cost(instance: Instance, solution: Sequence[ScalarLike]) -> Scalar:
    """Total movement: sum over sensors of |new center - initial center|."""
    y = as_solution(instance, solution)
    return sum((abs(yi - s.x) for s, yi in zip(instance.sensors, y)), start=Fraction(0))


def moved_indices(instance: Instance, solution: Sequence[ScalarLike]) -> tuple[int, ...]:
    """Indices of sensors whose position differs from their initial one."""
    y = as_solution(instance, solution)
    return tuple(i for i, (s, yi) in enumerate(zip(instance.sensors, y)) if yi != s.x)


def _merged_spans(spans: Iterable[tuple[Scalar, Scalar]]) -> list[tuple[Scalar, Scalar]]:
    """Merge closed intervals; touching intervals coalesce (no zero gaps)."""
    merged: list[tuple[Scalar, Scalar]] = []
    for lo, hi in sorted(spans):
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    return merged


def _clipped_spans(
    instance: Instance,
    solution: Solution,
    indices: Optional[Iterable[int]] = None,
) -> list[tuple[Scalar, Scalar]]:
    """Covered intervals clipped to the barrier; degenerate points are kept."""
    idx = range(instance.n) if indices is None else indices
    spans = []
    for i in idx:
        lo, hi = instance.sensors[i].interval(solution[i])
        lo = max(lo, Fraction(0))
        hi = min(hi, instance.length)
        if lo <= hi:
            spans.append((lo, hi))
    return spans


def verify_coverage(
    instance: Instance,
    solution: Sequence[ScalarLike],
    indices: Optional[Iterable[int]] = None,
) -> CoverageReport:
    """Sweep the clipped intervals and report every maximal uncovered gap.

    Intervals are closed, so touching endpoints leave no gap.  ``indices``
    restricts the check to a subset of sensors (used for active-set work).
    An empty barrier (L = 0) counts as covered.
    """
    y = as_solution(instance, solution)
    if instance.length == 0:
        return CoverageReport(covered=True, gaps=())
    gaps: list[tuple[Scalar, Scalar]] = []
    cursor = Fraction(0)
    for lo, hi in _merged_spans(_clipped_spans(instance, y, indices)):
        if lo > cursor:
            gaps.append((cursor, lo))
        cursor = max(cursor, hi)
    if cursor < instance.length:
        gaps.append((cursor, instance.length))
    return CoverageReport(covered=not gaps, gaps=tuple(gaps))


def is_feasible(instance: Instance) -> bool:
    """Sensors may move anywhere, so total interval length is the only obstruction."""
    return instance.total_coverage() >= instance.length


def minimal_active_set(
    instance: Instance,
    solution: Sequence[ScalarLike],
    within: Optional[Iterable[int]] = None,
) -> ActiveSet:
    """Inclusion-minimal set of sensors that still covers the barrier.

    Deterministic rule: scan candidates in decreasing radius (ties: higher
    index first) and drop any sensor whose removal keeps [0, L] covered.
    A single pass is enough: once a removal fails it fails for every
    smaller surviving set as well.
    """
    y = as_solution(instance, solution)
    keep = set(range(instance.n) if within is None else within)
    if not verify_coverage(instance, y, keep).covered:
        raise InfeasibleError("solution does not cover the barrier")
    order = sorted(keep, key=lambda i: (-instance.sensors[i].r, -i))
    for i in order:
        keep.discard(i)
        if not verify_coverage(instance, y, keep).covered:
            keep.add(i)
    return tuple(sorted(keep))


def is_order_preserving(
    instance: Instance,
    solution: Sequence[ScalarLike],
    active_set: Iterable[int],
) -> bool:
    """True iff positions restricted to the active set strictly increase."""
    y = as_solution(instance, solution)
    idx = sorted(active_set)
    if idx and not (0 <= idx[0] and idx[-1] < instance.n):
        raise ValueError("active set indices out of range")
    return all(y[a] < y[b] for a, b in zip(idx, idx[1:]))


def radius_ratio(instance: Instance) -> Scalar:
    """Largest radius divided by smallest radius."""
    if instance.n == 0:
        raise ValueError("radius ratio of an empty instance is undefined")
    radii = [s.r for s in instance.sensors]
    return max(radii) / min(radii)


def max_stab_count(
    instance: Instance,
    solution: Sequence[ScalarLike],
    indices: Iterable[int],
) -> int:
    """Largest number of the chosen intervals sharing one point of [0, L].

    With closed intervals the maximum is attained at an interval endpoint,
    so checking clipped endpoints is exhaustive.
    """
    y = as_solution(instance, solution)
    chosen = sorted(indices)
    spans = []
    for i in chosen:
        lo, hi = instance.sensors[i].interval(y[i])
        lo = max(lo, Fraction(0))
        hi = min(hi, instance.length)
        if lo <= hi:
            spans.append((lo, hi))
    points = {p for span in spans for p in span}
    best = 0
    for p in points:
        best = max(best, sum(1 for lo, hi in spans if lo <= p <= hi))
    return best


def integral_scale_factor(instance: Instance, half_radii_ok: bool = False) -> int:
    """Smallest positive integer c putting the instance on the integer grid.

    Scaling by the result makes L and every x integral, and every radius
    integral (or every 2r integral when ``half_radii_ok`` is set).
    """
    dens = [instance.length.denominator]
    for s in instance.sensors:
        dens.append(s.x.denominator)
        dens.append((2 * s.r if half_radii_ok else s.r).denominator)
    return math.lcm(*dens)


def scale_instance(instance: Instance, factor: ScalarLike) -> Instance:
    """Multiply every coordinate (length, centers, radii) by ``factor``."""
    c = as_scalar(factor)
    if c <= 0:
        raise ValueError("scale factor must be positive")
    return Instance(
        length=instance.length * c,
        sensors=tuple(Sensor(s.x * c, s.r * c) for s in instance.sensors),
    )


def scale_solution(solution: Sequence[ScalarLike], factor: ScalarLike) -> Solution:
    """Multiply every position by ``factor`` (same grid change as the instance)."""
    c = as_scalar(factor)
    return tuple(as_scalar(v) * c for v in solution)
