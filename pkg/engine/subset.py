"""Subset-expansion engine: sum over A of (t - 1)^|A| * lambda^c(A)."""

from math import comb
from typing import Dict, List, Tuple

from core.config import get_config
from core.guards import check_guard
from graphs import Graph
from polynomial import Poly

from .recursion import DefectVector, check_engine_size


def subset_component_counts(graph: Graph) -> Dict[Tuple[int, int], int]:
    """
    Number of edge subsets A per (|A|, c(A)), with c(A) the components of (V, A).

    Subsets are walked depth-first with an undoable union-find, so each step costs one
    union instead of a full component count.
    """
    n = graph.n
    parent = list(range(n))
    counts: Dict[Tuple[int, int], int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def walk(index: int, size: int, count: int) -> None:
        if index == graph.m:
            counts[(size, count)] = counts.get((size, count), 0) + 1
            return
        walk(index + 1, size, count)
        edge = graph.edges[index]
        ru, rv = find(edge.u), find(edge.v)
        if ru == rv:
            walk(index + 1, size + 1, count)
        else:
            parent[rv] = ru
            walk(index + 1, size + 1, count - 1)
            parent[rv] = rv

    walk(0, 0, n)
    return counts


def defect_vector_subset(graph: Graph) -> DefectVector:
    """
    All k-defect polynomials from the subset expansion.

    (t - 1)^a contributes C(a, k) (-1)^(a - k) to the t^k coefficient.

    Raises:
        GuardError: when 2^m subsets exceed the configured edge limit
    """
    check_engine_size(graph)
    check_guard("max_subset_edges", graph.m, get_config().engine.max_subset_edges)

    rows: List[List[int]] = [[0] * (graph.n + 1) for _ in range(graph.m + 1)]
    for (size, count), number in subset_component_counts(graph).items():
        for k in range(size + 1):
            sign = -1 if (size - k) % 2 else 1
            rows[k][count] += sign * number * comb(size, k)
    return tuple(Poly(tuple(row)) for row in rows)
