"""Deterministic random source shared by every sampler.

The generator is MT19937 as shipped in the standard library, seeded with
the integer seed through ``init_by_array``. Only two primitives of
``random.Random`` are used: ``getrandbits`` and ``random`` (53-bit floats
built from two 32-bit outputs). Both have been bit-stable across CPython
releases; every derived draw (bounded integers, shuffles, weighted picks)
is implemented here so that a seed reproduces the same sample on any
build.
"""

from __future__ import annotations

import random
from typing import MutableSequence, Sequence, TypeVar

T = TypeVar("T")

ALGORITHM = "mt19937/v1"
SEED_MAX = 2**64 - 1


class RandomSource:
    """Single-owner pseudo-random stream. Not safe to share across threads."""

    algorithm = ALGORITHM

    def __init__(self, seed: int):
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise TypeError(f"seed must be an integer, got {type(seed).__name__}")
        if not 0 <= seed <= SEED_MAX:
            raise ValueError(f"seed must be in [0, 2**64 - 1], got {seed}")
        self.seed = seed
        self._gen = random.Random(seed)

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed})"

    def uniform(self) -> float:
        """Float in [0, 1)."""
        return self._gen.random()

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection on ``bit_length(n)`` bits."""
        if n <= 0:
            raise ValueError("below() requires n >= 1")
        k = n.bit_length()
        getrandbits = self._gen.getrandbits
        r = getrandbits(k)
        while r >= n:
            r = getrandbits(k)
        return r

    def bernoulli(self, p: float) -> bool:
        return self.uniform() < p

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]

    def shuffle(self, items: MutableSequence) -> None:
        """In-place Fisher-Yates, last position first."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def shuffled(self, items: Sequence[T]) -> list[T]:
        out = list(items)
        self.shuffle(out)
        return out

    def sample(self, items: Sequence[T], k: int) -> list[T]:
        """``k`` distinct elements in draw order, by partial Fisher-Yates."""
        pool = list(items)
        n = len(pool)
        if not 0 <= k <= n:
            raise ValueError(f"cannot draw {k} items from {n}")
        for i in range(k):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def weighted_index(self, weights: Sequence[float]) -> int:
        """Index drawn proportionally to nonnegative ``weights``.

        Integer weights are drawn exactly; float weights use cumulative-sum
        inversion against ``uniform() * total``.
        """
        if all(isinstance(w, int) for w in weights):
            total = sum(weights)
            if total <= 0:
                raise ValueError("weights must have a positive sum")
            r = self.below(total)
            acc = 0
            for i, w in enumerate(weights):
                acc += w
                if r < acc:
                    return i
        total = float(sum(weights))
        if not total > 0.0:
            raise ValueError("weights must have a positive sum")
        r = self.uniform() * total
        acc = 0.0
        last = -1
        for i, w in enumerate(weights):
            if w <= 0:
                continue
            acc += w
            last = i
            if r < acc:
                return i
        # rounding left r at the very top of the range
        return last
