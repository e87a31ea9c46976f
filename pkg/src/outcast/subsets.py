"""Finite universes and subsets encoded as integer bitmasks.

Element ``names[i]`` corresponds to bit ``i``; a subset is a plain ``int``
in ``[0, 2**n)``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from outcast.errors import OutcastError, UniverseTooLarge

SubsetId = int

MAX_UNIVERSE = 16  # induced-choice evaluation is 3**n in the worst case


@dataclass(frozen=True)
class Universe:
    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) > MAX_UNIVERSE:
            raise UniverseTooLarge(len(self.names), MAX_UNIVERSE)
        if len(set(self.names)) != len(self.names):
            raise OutcastError(f"element names are not distinct: {list(self.names)}")

    @classmethod
    def of_size(cls, n: int) -> Universe:
        """Universe ``a, b, c, ...`` with ``n`` elements."""
        if n < 0:
            raise OutcastError(f"negative universe size {n}")
        if n > MAX_UNIVERSE:
            raise UniverseTooLarge(n, MAX_UNIVERSE)
        return cls(tuple(chr(ord("a") + i) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def size(self) -> int:
        """Number of subsets, ``2**n``."""
        return 1 << len(self.names)

    @property
    def full(self) -> SubsetId:
        return self.size - 1

    def contains(self, subset: SubsetId) -> bool:
        return 0 <= subset < self.size

    def elements(self, subset: SubsetId) -> list[str]:
        return [name for i, name in enumerate(self.names) if subset >> i & 1]

    def subset(self, elements: Iterable[str]) -> SubsetId:
        index = {name: i for i, name in enumerate(self.names)}
        bits = 0
        for e in elements:
            try:
                bits |= 1 << index[e]
            except KeyError:
                raise OutcastError(f"unknown element {e!r}") from None
        return bits

    def format(self, subset: SubsetId) -> str:
        """Render a subset as ``{a,b}``."""
        return "{" + ",".join(self.elements(subset)) + "}"


def popcount(subset: SubsetId) -> int:
    return bin(subset).count("1")


def subsets_of(subset: SubsetId) -> list[SubsetId]:
    """All subsets of ``subset``, ascending by bits."""
    # Standard submask walk yields descending order.
    out = []
    sub = subset
    while True:
        out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & subset
    out.reverse()
    return out


def supersets_within(lower: SubsetId, upper: SubsetId) -> list[SubsetId]:
    """All ``B`` with ``lower ⊆ B ⊆ upper``, ascending by bits."""
    return [lower | s for s in subsets_of(upper & ~lower)]


def is_subset(b: SubsetId, a: SubsetId) -> bool:
    return b & ~a == 0


def canonical_key(subset: SubsetId) -> tuple[int, int]:
    """Cardinality-major, bits-minor sort key; a total order refining ⊆."""
    return popcount(subset), subset


def canonical_order(subsets: Iterable[SubsetId]) -> list[SubsetId]:
    return sorted(subsets, key=canonical_key)


def all_subsets_canonical(n: int) -> list[SubsetId]:
    return canonical_order(range(1 << n))


def check_member(universe: Universe, subset: SubsetId) -> None:
    if not universe.contains(subset):
        raise OutcastError(f"subset {subset} is outside a universe of size {universe.n}")

