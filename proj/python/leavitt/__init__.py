"""Exact computation in Leavitt path algebras.

Canonical normal forms of algebra elements, generator-defined (Anick type)
automorphisms, and computable actions of the simple modules S^f_c, their
twists, and rational Chen modules.
"""

from ._leavitt import (  # noqa: F401
    AlgMatrix,
    ChenElement,
    ChenModule,
    DomainError,
    Element,
    GenMap,
    Graph,
    ModuleElement,
    ParseError,
    RelationError,
    Session,
    SfcModule,
    anick,
    build_phi_pq,
    check_relations,
    iso_condition,
    mixed_test_graph,
    oracle_suite,
    parse_genmap,
    parse_graph,
    rose,
    validate_pq,
)

__all__ = [
    "AlgMatrix",
    "ChenElement",
    "ChenModule",
    "DomainError",
    "Element",
    "GenMap",
    "Graph",
    "ModuleElement",
    "ParseError",
    "RelationError",
    "Session",
    "SfcModule",
    "anick",
    "build_phi_pq",
    "check_relations",
    "iso_condition",
    "mixed_test_graph",
    "oracle_suite",
    "parse_genmap",
    "parse_graph",
    "rose",
    "validate_pq",
]
