"""Exceptions raised across the package."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from outcast.choice import OutcastWitness


class OutcastError(ValueError):
    """Base class for every error raised by this package."""


class UniverseTooLarge(OutcastError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"universe size {n} exceeds cap {cap}")


class LengthMismatch(OutcastError):
    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"expected {expected} entries, got {got}")


class ChoiceViolation(OutcastError):
    """``table[subset]`` is not contained in ``subset``."""

    def __init__(self, subset: int, chosen: int):
        self.subset = subset
        self.chosen = chosen
        super().__init__(f"choice[{subset}] = {chosen} is not a subset of {subset}")


class NotAPermutation(OutcastError):
    def __init__(self, index: int, value: int, reason: str):
        self.index = index
        self.value = value
        self.reason = reason
        super().__init__(f"ranks[{index}] = {value}: {reason}")


class NotOutcast(OutcastError):
    def __init__(self, witness: OutcastWitness):
        self.witness = witness
        super().__init__(f"not an Outcast choice function: a={witness.a}, b={witness.b}")


class HeadNotInDomain(OutcastError):
    def __init__(self, head: int):
        self.head = head
        super().__init__(f"head {head} is not a member of the domain")


class UniverseMismatch(OutcastError):
    pass


class NotRepresentable(OutcastError):
    """No hyper-order induces the function; ``cycle`` lists subsets each forced above the previous."""

    def __init__(self, cycle: list[int]):
        self.cycle = cycle
        super().__init__(f"choice constraints are cyclic: {cycle}")
