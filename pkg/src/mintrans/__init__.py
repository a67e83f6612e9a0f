"""Exact counting of minimal transversals of β-acyclic hypergraphs and of
minimal dominating sets of strongly chordal graphs."""

from .domination import Graph, closed_neighborhood_hypergraph, count_minimal_dominating_sets
from .engine import InternalInvariantViolation, Solver, count_mtr, count_mtr_containing
from .formats import ParseError, parse_graph, parse_hypergraph, render_hypergraph
from .hypergraph import Hypergraph, connected_components, cross_union, hitting_edges, induce
from .ordering import (
    EliminationOrdering,
    NotBetaAcyclic,
    build_hex,
    find_elimination_ordering,
    lex_compare,
    verify_ordering,
)

__all__ = [
    "EliminationOrdering",
    "Graph",
    "Hypergraph",
    "InternalInvariantViolation",
    "NotBetaAcyclic",
    "ParseError",
    "Solver",
    "build_hex",
    "closed_neighborhood_hypergraph",
    "connected_components",
    "count_minimal_dominating_sets",
    "count_mtr",
    "count_mtr_containing",
    "cross_union",
    "find_elimination_ordering",
    "hitting_edges",
    "induce",
    "lex_compare",
    "parse_graph",
    "parse_hypergraph",
    "render_hypergraph",
    "verify_ordering",
]
