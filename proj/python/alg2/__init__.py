"""Exact classification, degenerations and subvarieties of 2-dimensional algebras."""

from ._alg2 import (
    classify,
    classify_label,
    closure_dimension,
    components,
    degenerates,
    derivation_dimension,
    identities,
    isomorphic,
    lattice_intersection,
    level,
    series_contains,
    verify_edge,
    verify_nondegeneration,
)

__all__ = [
    "classify",
    "classify_label",
    "closure_dimension",
    "components",
    "degenerates",
    "derivation_dimension",
    "identities",
    "isomorphic",
    "lattice_intersection",
    "level",
    "series_contains",
    "verify_edge",
    "verify_nondegeneration",
]
