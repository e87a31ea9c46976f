"""Exhaustive ground truth at tiny universe sizes.

Everything here is deliberately brute force: enumerate every choice function
and every hyper-order, and compare what the two sides of the representation
theorem produce.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from dataclasses import asdict, dataclass

import numpy as np

from outcast.choice import ChoiceFunction, OutcastWitness, check_outcast
from outcast.errors import UniverseTooLarge
from outcast.order import HyperOrder, induced_tables
from outcast.subsets import MAX_UNIVERSE, Universe, subsets_of

EXHAUSTIVE_CAP = 3  # n=4 has ~4.3e9 choice functions and 16! orders


def _require(n: int, cap: int) -> None:
    if n > cap:
        raise UniverseTooLarge(n, cap)
    if n < 0:
        raise ValueError(f"negative universe size {n}")


def count_choice_functions(n: int) -> int:
    """Product over k of (2**k) ** C(n, k)."""
    return math.prod((1 << k) ** math.comb(n, k) for k in range(n + 1))


def enumerate_choice_functions(n: int) -> Iterator[ChoiceFunction]:
    """Every choice function on ``n`` elements exactly once.

    Mixed-radix counter: digit ``A`` (subsets ascending by bits) ranges over
    the subsets of ``A`` ascending by bits, the last digit moving fastest.
    """
    _require(n, EXHAUSTIVE_CAP)
    universe = Universe.of_size(n)
    options = [subsets_of(a) for a in range(universe.size)]
    for table in itertools.product(*options):
        yield ChoiceFunction(universe, table)


def enumerate_orders(n: int) -> Iterator[HyperOrder]:
    """Every permutation of ``range(2**n)`` as a rank vector, lexicographically."""
    _require(n, EXHAUSTIVE_CAP)
    universe = Universe.of_size(n)
    for ranks in itertools.permutations(range(universe.size)):
        yield HyperOrder(universe, ranks)


def random_order(n: int, seed: int) -> HyperOrder:
    """Uniform random hyper-order; ``(n, seed)`` determines the result."""
    _require(n, MAX_UNIVERSE)
    universe = Universe.of_size(n)
    ranks = np.random.default_rng(seed).permutation(universe.size)
    return HyperOrder(universe, tuple(ranks.tolist()))


def scan_violations(f: ChoiceFunction) -> list[OutcastWitness]:
    """All pairs ``(A, B)`` with ``f(A) ⊆ B ⊆ A`` and ``f(A) != f(B)``.

    Visits every ``B ⊆ A`` for every ``A`` with no early exit; shares nothing
    with :func:`outcast.choice.check_outcast` beyond the table itself.
    """
    table = f.table
    found = []
    for a in range(len(table)):
        for b in range(len(table)):
            if b & ~a:
                continue
            if table[a] & ~b == 0 and table[a] != table[b]:
                found.append(OutcastWitness(a, b))
    return found


@dataclass(frozen=True)
class CensusReport:
    n: int
    total_choice_functions: int
    outcast_count: int
    total_orders: int
    induced_distinct: int
    directions_hold: bool

    def to_dict(self) -> dict:
        return asdict(self)


def theorem_census(n: int, batch: int = 8192) -> CensusReport:
    """Compare the Outcast functions with the functions induced by all orders.

    Orders are consumed in batches and merged into a set, so the report does
    not depend on how the stream is chunked.
    """
    _require(n, EXHAUSTIVE_CAP)
    total = 0
    outcast_tables = set()
    for f in enumerate_choice_functions(n):
        total += 1
        if check_outcast(f) is None:
            outcast_tables.add(f.table)

    induced = set()
    orders = 0
    perms = itertools.permutations(range(1 << n))
    while chunk := list(itertools.islice(perms, batch)):
        orders += len(chunk)
        tables = induced_tables(np.array(chunk, dtype=np.int64), n)
        induced.update(map(tuple, tables.tolist()))

    return CensusReport(
        n=n,
        total_choice_functions=total,
        outcast_count=len(outcast_tables),
        total_orders=orders,
        induced_distinct=len(induced),
        directions_hold=induced == outcast_tables,
    )
