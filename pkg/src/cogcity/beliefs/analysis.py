"""Static diagnostics over parsed belief programs.

Two checks gate evaluation: rule safety (every head variable must be
bound by the body) and cyclic predicate dependencies (rejected before
evaluation rather than risking runaway derivation chains).
"""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .language import BeliefProgram, Rule


@dataclass(frozen=True)
class UnsafeVariable:
    statement_index: int
    variable: str


def check_safety(program: BeliefProgram) -> list[UnsafeVariable]:
    """Head variables that no body atom binds, per rule."""
    findings: list[UnsafeVariable] = []
    for index, stmt in enumerate(program.statements):
        if not isinstance(stmt, Rule):
            continue
        body_vars: set[str] = set()
        for atom in stmt.body:
            body_vars |= atom.variables()
        for name in sorted(stmt.head.variables() - body_vars):
            findings.append(UnsafeVariable(statement_index=index, variable=name))
    return findings


def find_cycles(program: BeliefProgram) -> list[list[str]]:
    """Predicate cycles among the program's rules.

    Returns every strongly connected component of size >= 2 of the
    head-to-body dependency graph, plus self-loops, each as a sorted
    predicate list.
    """
    graph = nx.DiGraph()
    for stmt in program.statements:
        if not isinstance(stmt, Rule):
            continue
        for atom in stmt.body:
            graph.add_edge(stmt.head.predicate, atom.predicate)
    cycles: list[list[str]] = []
    for component in nx.strongly_connected_components(graph):
        if len(component) >= 2:
            cycles.append(sorted(component))
        else:
            (node,) = component
            if graph.has_edge(node, node):
                cycles.append([node])
    return sorted(cycles)
