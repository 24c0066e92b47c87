"""Ordered cycles and linkages in dense digraphs."""

from ._orderlink import (
    Digraph,
    ExtremalWitness,
    LinkOutcome,
    OracleRefused,
    ParseError,
    SolveOutcome,
    complete_digraph,
    extremal_linked,
    extremal_ordered,
    find_linkage,
    find_ordered_cycle,
    greedy_short_path_packing,
    hypothesis_holds,
    max_disjoint_short_paths,
    random_min_degree,
    required_min_degree,
    solve_linkage,
    solve_ordered,
    verify_linkage,
    verify_ordered_cycle,
)

__all__ = [
    "Digraph",
    "ExtremalWitness",
    "LinkOutcome",
    "OracleRefused",
    "ParseError",
    "SolveOutcome",
    "complete_digraph",
    "extremal_linked",
    "extremal_ordered",
    "find_linkage",
    "find_ordered_cycle",
    "greedy_short_path_packing",
    "hypothesis_holds",
    "max_disjoint_short_paths",
    "random_min_degree",
    "required_min_degree",
    "solve_linkage",
    "solve_ordered",
    "verify_linkage",
    "verify_ordered_cycle",
]
