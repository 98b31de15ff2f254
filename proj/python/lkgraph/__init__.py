"""Python bindings for the lkgraph C++ core."""

from ._lkgraph import (
    Diagram,
    DomainError,
    Error,
    ParseError,
    canonical_diagram,
    clasp,
    classify,
    contract_edge,
    crossing_change,
    divisors_via_minors,
    linking_matrix,
    lk_invariant,
    over_under_consistent,
    parse_sgd,
    random_homotopy_walk,
    serialize_sgd,
    smith_normal_form,
    validate,
)

__all__ = [
    "Diagram",
    "DomainError",
    "Error",
    "ParseError",
    "canonical_diagram",
    "clasp",
    "classify",
    "contract_edge",
    "crossing_change",
    "divisors_via_minors",
    "linking_matrix",
    "lk_invariant",
    "over_under_consistent",
    "parse_sgd",
    "random_homotopy_walk",
    "serialize_sgd",
    "smith_normal_form",
    "validate",
]
