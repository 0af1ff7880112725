"""Instance families, the exact-cover reduction, and seeded random instances.

The two named families ("fig5" and "fig6" in the CLI) pit order-preserving
solutions against unrestricted ones: a single large sensor sits at the left
end of a row of unit sensors, so any solution that keeps index order must
shuffle the whole row instead of sending the large sensor across it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .model import (
    Instance,
    ResourceLimitError,
    Scalar,
    ScalarLike,
    Sensor,
    as_scalar,
)

_MASK64 = (1 << 64) - 1


class RandomStream:
    """Self-contained splitmix64 stream; fixed algorithm, stable across runs.

    The output sequence is part of the golden-file contract: changing the
    constants or the draw order breaks recorded instances.
    """

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_raw(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_int(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here)."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_raw() % (hi - lo + 1)


@dataclass(frozen=True)
class ExactCoverInstance:
    """Set-cover-with-disjointness input: universe {1..m}, subsets, size bound."""

    universe_size: int
    sets: tuple[frozenset[int], ...]
    max_sets: int

    def __post_init__(self) -> None:
        if self.universe_size < 0:
            raise ValueError("universe size must be >= 0")
        if self.max_sets < 0:
            raise ValueError("solution size bound must be >= 0")
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        universe = set(range(1, self.universe_size + 1))
        for s in sets:
            if not s:
                raise ValueError("subsets must be nonempty")
            if not s <= universe:
                raise ValueError(f"subset {sorted(s)} leaves the universe")


@dataclass(frozen=True)
class ReductionOutput:
    """Barrier instance encoding an exact-cover question as a k-mover budget query.

    ``source_sets[i]`` is the index of the subset that sensor ``i`` (in the
    instance's sorted order) encodes.  Radii are half-integers; scale by 2
    (``model.scale_instance``) before handing this to the integer solvers.
    """

    instance: Instance
    budget: Scalar
    movers: int
    source_sets: tuple[int, ...]


def gen_fig5(rho: ScalarLike, length: ScalarLike) -> Instance:
    """Large sensor at 0 plus unit sensors tiling [0, L - 2*rho] exactly.

    Total interval length equals L, so every feasible solution is a perfect
    tiling of the barrier.  Requires L > 2*rho and (L - 2*rho)/2 integral.
    """
    rho = as_scalar(rho)
    length = as_scalar(length)
    if rho < 1:
        raise ValueError("rho must be >= 1")
    if length <= 2 * rho:
        raise ValueError("barrier must be longer than the large sensor")
    count = (length - 2 * rho) / 2
    if count.denominator != 1 or count <= 0:
        raise ValueError(f"(L - 2*rho)/2 must be a positive integer, got {count}")
    sensors = [Sensor(0, rho)]
    sensors += [Sensor(2 * i + 1, 1) for i in range(int(count))]
    return Instance(length=length, sensors=tuple(sensors))


def gen_fig6(rho: ScalarLike, m: int, delta: ScalarLike) -> Instance:
    """Large sensor at 0 plus m unit sensors spaced 2 + delta apart.

    The unit row starts at 1 and its last interval ends exactly at
    L = 2m + (m-1)*delta, leaving m-1 thin gaps of width delta between
    consecutive unit intervals.  Requires m*delta < 2*rho so the large
    sensor's spare length exceeds the total gap width.
    """
    rho = as_scalar(rho)
    delta = as_scalar(delta)
    if rho < 1:
        raise ValueError("rho must be >= 1")
    if m < 1:
        raise ValueError("need at least one unit sensor")
    if delta <= 0:
        raise ValueError("gap width must be positive")
    if m * delta >= 2 * rho:
        raise ValueError("m*delta must stay below 2*rho")
    sensors = [Sensor(0, rho)]
    sensors += [Sensor(1 + i * (2 + delta), 1) for i in range(m)]
    return Instance(length=2 * m + (m - 1) * delta, sensors=tuple(sensors))


def reduce_exact_cover(ec: ExactCoverInstance) -> ReductionOutput:
    """Encode an exact-cover question as a barrier instance plus (B, k) bounds.

    With n subsets and base b = n + 1: element j contributes b^(j-1) to the
    diameter of each sensor whose subset contains it and b^(j+m) to that
    sensor's distance from the barrier; L sums the element weights and the
    budget allows hauling k chosen sensors to the barrier and arranging them.
    """
    m, n = ec.universe_size, len(ec.sets)
    base = n + 1
    elem_weight = {j: Fraction(base) ** (j - 1) for j in range(1, m + 1)}
    dist_weight = {j: Fraction(base) ** (j + m) for j in range(1, m + 1)}
    sensors = []
    tagged = []
    for i, subset in enumerate(ec.sets):
        radius = sum((elem_weight[j] for j in subset), start=Fraction(0)) / 2
        offset = sum((dist_weight[j] for j in subset), start=Fraction(0))
        sensor = Sensor(-radius - offset, radius)
        sensors.append(sensor)
        tagged.append((sensor.x, sensor.r, i))
    length = sum(elem_weight.values(), start=Fraction(0))
    budget = sum(dist_weight.values(), start=Fraction(0)) + ec.max_sets * length
    instance = Instance(length=length, sensors=tuple(sensors))
    order = sorted(range(n), key=lambda i: (tagged[i][0], tagged[i][1], i))
    return ReductionOutput(
        instance=instance,
        budget=budget,
        movers=ec.max_sets,
        source_sets=tuple(order),
    )


def solve_exact_cover_brute(ec: ExactCoverInstance, subset_cap: int = 10**8) -> bool:
    """Decide exact cover by enumerating subfamilies of size <= k."""
    n = len(ec.sets)
    if 2**n > subset_cap:
        raise ResourceLimitError(f"2^{n} subfamilies exceed the cap {subset_cap}")
    universe = frozenset(range(1, ec.universe_size + 1))
    for size in range(min(ec.max_sets, n) + 1):
        for chosen in combinations(range(n), size):
            covered: set[int] = set()
            total = 0
            for i in chosen:
                covered |= ec.sets[i]
                total += len(ec.sets[i])
            if covered == universe and total == ec.universe_size:
                return True
    return False


def gen_random(
    n: int,
    length: ScalarLike,
    r_min: int,
    r_max: int,
    x_range: tuple[int, int],
    seed: int,
) -> Instance:
    """Seeded instance with integer centers and radii; draw order is frozen.

    For each sensor the center is drawn before the radius.  Output is sorted
    by the Instance invariant, so equal seeds give identical instances.
    """
    if n < 0:
        raise ValueError("sensor count must be >= 0")
    if not (0 < r_min <= r_max):
        raise ValueError("need 0 < r_min <= r_max")
    stream = RandomStream(seed)
    sensors = []
    for _ in range(n):
        x = stream.next_int(x_range[0], x_range[1])
        r = stream.next_int(r_min, r_max)
        sensors.append(Sensor(x, r))
    return Instance(length=as_scalar(length), sensors=tuple(sensors))
