"""Exact defensive k-alliance numbers, their bounds, and corpus checks."""

from .alliance import (
    AllianceCertificate,
    construct_star_alliance,
    is_defensive_k_alliance,
    shrink_alliance,
)
from .bounds import BoundsReport, report
from .graph_core import Graph, classify, from_spec, line_graph, parse_edge_list, serialize
from .solver import SolveResult, closed_form, line_alliance_number, min_alliance, profile
from .spectral import algebraic_connectivity, fiedler_quotient, laplacian

__all__ = [
    "AllianceCertificate",
    "BoundsReport",
    "Graph",
    "SolveResult",
    "algebraic_connectivity",
    "classify",
    "closed_form",
    "construct_star_alliance",
    "fiedler_quotient",
    "from_spec",
    "is_defensive_k_alliance",
    "laplacian",
    "line_alliance_number",
    "line_graph",
    "min_alliance",
    "parse_edge_list",
    "profile",
    "report",
    "serialize",
    "shrink_alliance",
]
