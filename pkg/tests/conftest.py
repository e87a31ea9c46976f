import pytest
from hypothesis import strategies as st

from outcast import ChoiceFunction, HyperOrder, Universe

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


def table_from_sets(universe, mapping):
    """Build a table from {"ab": "a", ...}; keys and values are element strings."""
    table = [0] * universe.size
    for a, chosen in mapping.items():
        table[universe.subset(a)] = universe.subset(chosen)
    return table


@pytest.fixture
def u2():
    return Universe(("a", "b"))


@pytest.fixture
def worked(u2):
    # ∅→∅, {a}→{a}, {b}→∅, {a,b}→{a}
    return ChoiceFunction(u2, (0, 1, 0, 1))


@pytest.fixture
def violating(u2):
    # ∅→∅, {a}→∅, {b}→∅, {a,b}→{a}
    return ChoiceFunction(u2, (0, 0, 0, 1))


@st.composite
def choice_functions(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    universe = Universe.of_size(n)
    raw = draw(st.lists(st.integers(0, universe.full), min_size=universe.size, max_size=universe.size))
    return ChoiceFunction(universe, tuple(r & a for a, r in enumerate(raw)))


@st.composite
def hyper_orders(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    universe = Universe.of_size(n)
    ranks = draw(st.permutations(range(universe.size)))
    return HyperOrder(universe, tuple(ranks))
