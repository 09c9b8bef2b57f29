"""Enumerate, canonicalize and classify wiring diagrams of real line arrangements."""

from ._core import (
    GroupPresentation,
    InputError,
    InternalError,
    LefschetzList,
    ResourceError,
    abelianization,
    admissible_signatures,
    canonical_lattice,
    check_uip,
    classify_signatures,
    enumerate_omega,
    equiv_class_min,
    equiv_class_size,
    lattices_isomorphic,
    lcs_ranks,
    mu,
    presentation,
    profile,
    profiles_match,
    quotient_count,
    relation_table,
    render_svg,
    sigma,
    signature_of,
    similarity_classes,
    skeleton,
    structured_group,
    structured_group_presentation,
    tau,
    triangle_moves,
)

__all__ = [name for name in dir() if not name.startswith("_")]
