"""Construct a hyper-order representing a given Outcast choice function.

The fixpoints of ``f`` are put in a total order, each fiber
``{B | f(B) = F}`` is ordered with ``F`` on top, and the fibers are stacked
in fixpoint order. For the stack to induce ``f``, the fixpoint order must
place ``f(B)`` before ``f(A)`` whenever ``B ⊆ A``. Extending ⊆ on the
fixpoints alone is not enough: with ``f({a,b}) = {a}`` and both singletons
fixed, ``{b}`` has to sit below ``{a}`` although the two are incomparable.
When that relation has a cycle, no order induces ``f`` at all.
"""

from __future__ import annotations

import graphlib
import heapq
from collections.abc import Iterable
from dataclasses import dataclass

from outcast.choice import ChoiceFunction, domains
from outcast.errors import HeadNotInDomain, NotRepresentable, UniverseMismatch
from outcast.order import HyperOrder, induced_choice
from outcast.subsets import SubsetId, canonical_key, canonical_order, subsets_of


@dataclass(frozen=True)
class SynthesisTrace:
    fixpoint_sequence: tuple[SubsetId, ...]
    domain_sequences: dict[SubsetId, tuple[SubsetId, ...]]
    order: HyperOrder

    @property
    def ranks(self) -> tuple[int, ...]:
        return self.order.ranks


@dataclass(frozen=True)
class Mismatch:
    """First subset (canonical order) where the order's induced choice differs from ``f``."""

    subset: SubsetId
    expected: SubsetId
    induced: SubsetId


def fixpoint_order(fixed: Iterable[SubsetId], f: ChoiceFunction | None = None) -> list[SubsetId]:
    """Total order on the fixpoints ``fixed``.

    Without ``f`` this is ⊆ extended by ``canonical_key``. With ``f`` it is the
    canonically least linear extension of ``f(A - i) -> f(A)`` for ``i ∈ A``,
    whose transitive closure relates ``f(B)`` to ``f(A)`` for every ``B ⊆ A``
    and contains ⊆. Raises :class:`~outcast.errors.NotRepresentable` on a cycle.
    """
    fixed = list(fixed)
    if f is None:
        return canonical_order(fixed)

    preds: dict[SubsetId, set[SubsetId]] = {F: set() for F in fixed}
    for a, chosen in enumerate(f.table):
        for i in range(f.universe.n):
            if a >> i & 1:
                below = f.table[a ^ (1 << i)]
                if below != chosen:
                    preds[chosen].add(below)

    succs: dict[SubsetId, list[SubsetId]] = {F: [] for F in fixed}
    pending = {F: len(p) for F, p in preds.items()}
    for F, p in preds.items():
        for q in p:
            succs[q].append(F)
    heap = [canonical_key(F) for F in fixed if pending[F] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, F = heapq.heappop(heap)
        out.append(F)
        for G in succs[F]:
            pending[G] -= 1
            if pending[G] == 0:
                heapq.heappush(heap, canonical_key(G))
    if len(out) < len(fixed):
        raise NotRepresentable(_find_cycle(preds, {F for F in fixed if pending[F] > 0}))
    return out


def _find_cycle(preds: dict[SubsetId, set[SubsetId]], stuck: set[SubsetId]) -> list[SubsetId]:
    # every stuck node has a stuck predecessor, so walking back must revisit one
    node = min(stuck, key=canonical_key)
    path: list[SubsetId] = []
    seen: dict[SubsetId, int] = {}
    while node not in seen:
        seen[node] = len(path)
        path.append(node)
        node = min((p for p in preds[node] if p in stuck), key=canonical_key)
    cycle = path[seen[node]:]
    cycle.reverse()
    return cycle


def domain_order(members: Iterable[SubsetId], head: SubsetId) -> list[SubsetId]:
    members = list(members)
    if head not in members:
        raise HeadNotInDomain(head)
    rest = canonical_order(m for m in members if m != head)
    return rest + [head]


def synthesize_order(f: ChoiceFunction) -> SynthesisTrace:
    """Stack the fibers of ``f`` in :func:`fixpoint_order`, each with its fixpoint on top.

    Raises
    ------
    NotOutcast
        ``f`` violates Outcast.
    NotRepresentable
        ``f`` is Outcast but no hyper-order induces it (possible from ``n = 3``).
    """
    partition = domains(f)
    fixed = fixpoint_order(partition.fixpoints, f)
    sequences = {F: tuple(domain_order(partition.members[F], F)) for F in fixed}

    ranks = [0] * f.universe.size
    position = 0
    for F in fixed:
        for subset in sequences[F]:
            ranks[subset] = position
            position += 1
    return SynthesisTrace(tuple(fixed), sequences, HyperOrder(f.universe, tuple(ranks)))


def verify_representation(f: ChoiceFunction, order: HyperOrder) -> Mismatch | None:
    if f.universe.n != order.universe.n:
        raise UniverseMismatch(
            f"choice function has {f.universe.n} elements, order has {order.universe.n}"
        )
    induced = induced_choice(order).table
    for subset in sorted(range(f.universe.size), key=canonical_key):
        if induced[subset] != f.table[subset]:
            return Mismatch(subset, f.table[subset], induced[subset])
    return None


def rationalize(f: ChoiceFunction) -> HyperOrder:
    """Some hyper-order inducing ``f``, found by topologically sorting the
    constraints ``B < f(A)`` for every ``B ⊆ A`` other than ``f(A)``.

    Unlike :func:`synthesize_order` this decides representability exactly:
    it raises :class:`~outcast.errors.NotRepresentable` with a cycle of
    subsets when the constraints cannot all hold, which happens for some
    Outcast functions once ``n >= 3``. Ties are broken by ``canonical_key``.
    """
    below: dict[SubsetId, set[SubsetId]] = {s: set() for s in range(f.universe.size)}
    for a, chosen in enumerate(f.table):
        below[chosen].update(b for b in subsets_of(a) if b != chosen)

    sorter = graphlib.TopologicalSorter(below)
    try:
        sorter.prepare()
    except graphlib.CycleError as exc:
        # graphlib reports the cycle with its first node repeated at the end
        cycle = list(exc.args[1])[:-1]
        raise NotRepresentable(cycle) from None

    ranks = [0] * f.universe.size
    position = 0
    while sorter.is_active():
        for subset in sorted(sorter.get_ready(), key=canonical_key):
            ranks[subset] = position
            position += 1
            sorter.done(subset)
    return HyperOrder(f.universe, tuple(ranks))
