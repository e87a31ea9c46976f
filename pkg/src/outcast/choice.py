"""Choice functions over a finite universe, the Outcast test, fixpoints and domains."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from outcast.errors import ChoiceViolation, LengthMismatch, NotOutcast
from outcast.subsets import (
    SubsetId,
    Universe,
    canonical_key,
    canonical_order,
    supersets_within,
)


@dataclass(frozen=True)
class ChoiceFunction:
    """A total table ``table[A] = f(A)`` with ``f(A) ⊆ A`` for every subset ``A``.

    Construct through :func:`validate` when the table comes from outside;
    direct construction runs the same checks.
    """

    universe: Universe
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.universe.size:
            raise LengthMismatch(self.universe.size, len(table))
        for a, chosen in enumerate(table):
            if chosen & ~a:
                raise ChoiceViolation(a, chosen)

    def __call__(self, subset: SubsetId) -> SubsetId:
        return self.table[subset]

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    @classmethod
    def identity(cls, universe: Universe) -> ChoiceFunction:
        return cls(universe, tuple(range(universe.size)))

    @classmethod
    def constant_empty(cls, universe: Universe) -> ChoiceFunction:
        return cls(universe, (0,) * universe.size)


@dataclass(frozen=True)
class OutcastWitness:
    """Subsets with ``f(a) ⊆ b ⊆ a`` but ``f(a) != f(b)``."""

    a: SubsetId
    b: SubsetId


@dataclass(frozen=True)
class DomainPartition:
    """Fibers ``{B | f(B) = F}`` of an Outcast function, keyed by fixpoint ``F``.

    ``fixpoints`` is in canonical order; each ``members[F]`` is in canonical order too.
    """

    fixpoints: tuple[SubsetId, ...]
    members: dict[SubsetId, tuple[SubsetId, ...]]

    def __len__(self) -> int:
        return len(self.fixpoints)


def validate(universe: Universe, raw_table: Sequence[int]) -> ChoiceFunction:
    """Build a :class:`ChoiceFunction`, raising on the first bad entry.

    Raises
    ------
    LengthMismatch
        ``raw_table`` does not have ``2**n`` entries.
    ChoiceViolation
        Some ``raw_table[A]`` is not a subset of ``A``; the smallest such ``A``
        (by bits) is reported.
    """
    return ChoiceFunction(universe, tuple(raw_table))


def local_violations(f: ChoiceFunction) -> np.ndarray:
    """Boolean mask of subsets ``A`` having some ``i ∈ A \\ f(A)`` with ``f(A - i) != f(A)``.

    ``f`` is Outcast iff this mask is empty: any ``B`` with ``f(A) ⊆ B ⊆ A`` is
    reached from ``A`` by deleting unchosen elements one at a time.
    """
    table = f.array
    idx = np.arange(table.size, dtype=np.int64)
    bad = np.zeros(table.size, dtype=bool)
    for i in range(f.universe.n):
        bit = 1 << i
        removable = ((idx & bit) != 0) & ((table & bit) == 0)
        bad |= removable & (table[idx ^ bit] != table)
    return bad


def check_outcast(f: ChoiceFunction) -> OutcastWitness | None:
    """Return ``None`` if ``f`` is Outcast, else the witness minimal in
    ``(canonical_key(a), canonical_key(b))``.

    The smallest violating ``a`` always carries a one-element-deletion
    violation, so the vectorised local test locates it; ``b`` is then found
    by scanning ``f(a) ⊆ b ⊆ a`` in canonical order.
    """
    bad = local_violations(f)
    if not bad.any():
        return None
    a = min((int(x) for x in np.flatnonzero(bad)), key=canonical_key)
    chosen = f.table[a]
    for b in canonical_order(supersets_within(chosen, a)):
        if f.table[b] != chosen:
            return OutcastWitness(a, b)
    raise AssertionError(f"local violation at {a} has no witness")  # pragma: no cover


def is_outcast(f: ChoiceFunction) -> bool:
    return not local_violations(f).any()


def fixpoints(f: ChoiceFunction) -> list[SubsetId]:
    return canonical_order(a for a, chosen in enumerate(f.table) if chosen == a)


def domains(f: ChoiceFunction) -> DomainPartition:
    witness = check_outcast(f)
    if witness is not None:
        raise NotOutcast(witness)
    fixed = fixpoints(f)
    members: dict[SubsetId, list[SubsetId]] = {F: [] for F in fixed}
    for b in canonical_order(range(f.universe.size)):
        members[f.table[b]].append(b)
    return DomainPartition(tuple(fixed), {F: tuple(m) for F, m in members.items()})


def is_idempotent(f: ChoiceFunction) -> bool:
    table = f.array
    return bool(np.array_equal(table[table], table))
