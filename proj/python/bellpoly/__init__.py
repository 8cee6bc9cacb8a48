"""Exact correlation polytopes with classical communication."""

from ._bellpoly import (
    DomainError,
    affine_dimension,
    bidir_vertices,
    classes,
    facets,
    fixed_vertices,
    hat_distribution,
    lower_bound,
    lsr_vertices,
    membership,
    no_signaling,
    project,
    simulate,
    stirling,
    uniform_table,
)

__all__ = [
    "DomainError",
    "affine_dimension",
    "bidir_vertices",
    "classes",
    "facets",
    "fixed_vertices",
    "hat_distribution",
    "lower_bound",
    "lsr_vertices",
    "membership",
    "no_signaling",
    "project",
    "simulate",
    "stirling",
    "uniform_table",
]
