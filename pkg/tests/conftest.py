"""Shared instance corpora for the test suite.

The random corpus parameters (n <= 6, x in [-10, 15], r in {1, 2, 3},
L <= 12, B <= 8) are pinned: they keep every instance within easy reach of
the exhaustive oracles while still producing feasible, infeasible, covered
and badly-shuffled cases.
"""

from __future__ import annotations

from typing import Iterator

from barriercover import Instance, gen_random
from barriercover.generators import RandomStream

CORPUS_SEED = 20260810


def random_corpus(count: int, seed0: int = CORPUS_SEED) -> Iterator[tuple[int, Instance, int]]:
    """Yield (case number, instance, budget) triples, deterministically."""
    meta = RandomStream(seed0)
    for case in range(count):
        n = meta.next_int(1, 6)
        length = meta.next_int(4, 12)
        budget = meta.next_int(0, 8)
        instance = gen_random(n, length, 1, 3, (-10, 15), seed0 + 1000 + case)
        yield case, instance, budget
