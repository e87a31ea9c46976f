"""Outcast (Aizerman) choice functions on finite sets and their representation
by total orders on the powerset."""

from outcast.choice import (
    ChoiceFunction,
    DomainPartition,
    OutcastWitness,
    check_outcast,
    domains,
    fixpoints,
    is_idempotent,
    is_outcast,
    validate,
)
from outcast.errors import (
    ChoiceViolation,
    HeadNotInDomain,
    LengthMismatch,
    NotAPermutation,
    NotOutcast,
    NotRepresentable,
    OutcastError,
    UniverseMismatch,
    UniverseTooLarge,
)
from outcast.oracle import (
    CensusReport,
    enumerate_choice_functions,
    enumerate_orders,
    random_order,
    scan_violations,
    theorem_census,
)
from outcast.order import HyperOrder, choose_max, induced_choice, validate_order
from outcast.subsets import Universe, canonical_key, is_subset, subsets_of
from outcast.synthesis import (
    Mismatch,
    SynthesisTrace,
    domain_order,
    fixpoint_order,
    rationalize,
    synthesize_order,
    verify_representation,
)

__version__ = "0.1.0"
