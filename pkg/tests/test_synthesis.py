import pytest
from hypothesis import given, settings

from outcast import (
    ChoiceFunction,
    HeadNotInDomain,
    Mismatch,
    NotOutcast,
    NotRepresentable,
    Universe,
    domain_order,
    enumerate_choice_functions,
    fixpoint_order,
    induced_choice,
    is_outcast,
    rationalize,
    synthesize_order,
    validate_order,
    verify_representation,
)
from outcast.subsets import is_subset

from conftest import hyper_orders

A, B = 1, 2

# Outcast functions at n=3 with no representing order: the pairs are chosen
# cyclically and the full set is chosen whole. Singletons map to themselves.
CYCLIC = [
    (0, 1, 2, 1, 4, 4, 2, 7),  # {a,b}→{a}, {a,c}→{c}, {b,c}→{b}
    (0, 1, 2, 2, 4, 1, 4, 7),  # {a,b}→{b}, {a,c}→{a}, {b,c}→{c}
]


@pytest.mark.parametrize(
    "given_, expected",
    [([0, A], [0, A]), ([B, A], [A, B]), ([A | B, 0, B], [0, B, A | B])],
)
def test_fixpoint_order(given_, expected):
    assert fixpoint_order(given_) == expected


@pytest.mark.parametrize(
    "members, head, expected",
    [([0, B], 0, [B, 0]), ([A, A | B], A, [A | B, A]), ([5], 5, [5])],
)
def test_domain_order(members, head, expected):
    assert domain_order(members, head) == expected


def test_domain_order_head_missing():
    with pytest.raises(HeadNotInDomain):
        domain_order([1, 3], 2)


def test_synthesize_examples(u2, worked):
    assert synthesize_order(ChoiceFunction.identity(u2)).ranks == (0, 1, 2, 3)
    assert synthesize_order(ChoiceFunction.constant_empty(u2)).ranks == (3, 0, 1, 2)
    trace = synthesize_order(worked)
    assert trace.ranks == (1, 3, 0, 2)
    assert trace.fixpoint_sequence == (0, A)
    assert trace.domain_sequences == {0: (B, 0), A: (A | B, A)}


def test_synthesize_rejects_non_outcast(violating):
    with pytest.raises(NotOutcast):
        synthesize_order(violating)


def test_verify_representation_examples(u2, worked):
    ident = ChoiceFunction.identity(u2)
    assert verify_representation(worked, validate_order(u2, [1, 3, 0, 2])) is None
    assert verify_representation(ident, validate_order(u2, [0, 1, 2, 3])) is None
    assert verify_representation(ident, validate_order(u2, [3, 0, 1, 2])) == Mismatch(A, A, 0)


def trace_properties(f, trace):
    """Proof-step properties that hold for every Outcast f."""
    ranks = trace.ranks
    for a in range(f.universe.size):
        assert ranks[a] <= ranks[f(a)]
    seq = trace.fixpoint_sequence
    for i, x in enumerate(seq):
        for y in seq[:i]:
            assert not (is_subset(x, y) and x != y)
    flat = [s for F in seq for s in trace.domain_sequences[F]]
    assert [ranks[s] for s in flat] == list(range(len(flat)))
    for F in seq:
        block = trace.domain_sequences[F]
        assert block[-1] == F
        assert ranks[F] == max(ranks[s] for s in block)


def subset_bound_holds(f, ranks):
    return all(
        ranks[b] <= ranks[f(a)]
        for a in range(f.universe.size)
        for b in range(f.universe.size)
        if is_subset(b, a)
    )


def test_synthesis_exhaustive_small():
    """Every Outcast f with n <= 3: synthesis succeeds exactly when an
    independent topological sort of all constraints finds an order, and then
    reproduces f."""
    failures = []
    for n in range(4):
        for f in enumerate_choice_functions(n):
            if not is_outcast(f):
                continue
            try:
                expected = rationalize(f)
            except NotRepresentable:
                expected = None
            try:
                trace = synthesize_order(f)
            except NotRepresentable:
                assert expected is None
                failures.append(f.table)
                continue
            assert expected is not None
            trace_properties(f, trace)
            assert subset_bound_holds(f, trace.ranks)
            assert verify_representation(f, trace.order) is None
    assert failures == CYCLIC


def test_subset_fixpoint_order_is_not_enough():
    # {a}→{a}, {b}→{b}, {a,b}→{a}: ⊆ leaves {a}, {b} unordered and the
    # canonical tie-break picks the wrong one
    f = ChoiceFunction(Universe.of_size(2), (0, 1, 2, 1))
    assert fixpoint_order([0, 1, 2]) == [0, 1, 2]
    assert fixpoint_order([0, 1, 2], f) == [0, 2, 1]
    assert synthesize_order(f).ranks == (0, 3, 1, 2)  # ∅ < {b} < {a,b} < {a}
    assert verify_representation(f, synthesize_order(f).order) is None


def test_fixpoint_order_reduces_to_canonical_without_extra_constraints():
    u = Universe.of_size(3)
    ident = ChoiceFunction.identity(u)
    assert fixpoint_order(range(8), ident) == fixpoint_order(range(8))


@pytest.mark.parametrize("table", CYCLIC)
def test_cyclic_counterexample(table):
    f = ChoiceFunction(Universe.of_size(3), table)
    assert is_outcast(f)
    with pytest.raises(NotRepresentable) as err:
        synthesize_order(f)
    assert sorted(err.value.cycle) == [1, 2, 4]
    with pytest.raises(NotRepresentable) as err:
        rationalize(f)
    cycle = err.value.cycle
    assert sorted(cycle) == [1, 2, 4]
    # each singleton is chosen over its predecessor from their pair
    for lo, hi in zip(cycle, cycle[1:] + cycle[:1]):
        assert f(lo | hi) == hi


@settings(max_examples=100)
@given(hyper_orders(max_n=6))
def test_round_trip_from_orders(order):
    f = induced_choice(order)
    trace = synthesize_order(f)
    trace_properties(f, trace)
    assert verify_representation(f, trace.order) is None
    assert verify_representation(f, rationalize(f)) is None
