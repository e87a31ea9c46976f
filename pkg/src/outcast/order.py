"""Total orders on the powerset (hyper-orders) and the choice functions they induce."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from outcast.choice import ChoiceFunction
from outcast.errors import LengthMismatch, NotAPermutation
from outcast.subsets import SubsetId, Universe, subsets_of


@dataclass(frozen=True)
class HyperOrder:
    """A total order on ``2**X`` stored as ranks: ``ranks[A]`` is the position of ``A``.

    Rank 0 is least and ``2**n - 1`` greatest. Every order on a finite set is
    a well-order, so no further condition is checked.
    """

    universe: Universe
    ranks: tuple[int, ...]

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        object.__setattr__(self, "ranks", ranks)
        size = self.universe.size
        if len(ranks) != size:
            raise LengthMismatch(size, len(ranks))
        seen = [False] * size
        for index, r in enumerate(ranks):
            if not 0 <= r < size:
                raise NotAPermutation(index, r, f"out of range [0, {size})")
            if seen[r]:
                raise NotAPermutation(index, r, "duplicate rank")
            seen[r] = True

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.ranks, dtype=np.int64)

    def sequence(self) -> list[SubsetId]:
        """Subsets listed from least to greatest."""
        out = [0] * len(self.ranks)
        for subset, r in enumerate(self.ranks):
            out[r] = subset
        return out

    def less(self, a: SubsetId, b: SubsetId) -> bool:
        return self.ranks[a] < self.ranks[b]


def validate_order(universe: Universe, raw_ranks: Sequence[int]) -> HyperOrder:
    """Build a :class:`HyperOrder`; raises :class:`NotAPermutation` on the first
    out-of-range or repeated rank."""
    return HyperOrder(universe, tuple(raw_ranks))


def choose_max(order: HyperOrder, subset: SubsetId) -> SubsetId:
    """The highest-ranked subset of ``subset`` (plain scan, no precomputation)."""
    ranks = order.ranks
    return max(subsets_of(subset), key=ranks.__getitem__)


def induced_tables(ranks: np.ndarray, n: int) -> np.ndarray:
    """Induced choice tables for a batch of rank vectors.

    ``ranks`` has shape ``(..., 2**n)``; each row must be a permutation. The
    best rank over all subsets of ``A`` is propagated one bit at a time, so
    the cost is ``n * 2**n`` per row.
    """
    ranks = np.asarray(ranks, dtype=np.int64)
    size = 1 << n
    best = ranks.copy()
    idx = np.arange(size)
    for i in range(n):
        bit = 1 << i
        has = idx[(idx & bit) != 0]
        best[..., has] = np.maximum(best[..., has], best[..., has ^ bit])
    # ranks are bijective, so the inverse permutation maps a rank back to its subset
    inverse = np.empty_like(ranks)
    np.put_along_axis(inverse, ranks, np.broadcast_to(idx, ranks.shape), axis=-1)
    return np.take_along_axis(inverse, best, axis=-1)


def induced_choice(order: HyperOrder) -> ChoiceFunction:
    """The choice function attaching to each ``A`` its maximal subset under ``order``."""
    table = induced_tables(order.array, order.universe.n)
    return ChoiceFunction(order.universe, tuple(table.tolist()))
