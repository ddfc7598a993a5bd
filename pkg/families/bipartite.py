"""Independent degree sums and two-color bad-edge spectra."""

from typing import Set

from core.guards import check_guard
from engine import bad_count_spectrum
from graphs import Graph
from graphs.graph import adjacency_masks

MAX_INDEPENDENT_VERTICES = 20


def independent_degree_sums(graph: Graph) -> Set[int]:
    """
    All values of sum(deg(v) for v in I) over independent sets I, the empty set included.

    Degrees count multiplicity. A vertex with a loop is adjacent to itself and never
    independent.
    """
    check_guard("max_independent_vertices", graph.n, MAX_INDEPENDENT_VERTICES)
    masks = adjacency_masks(graph)
    degrees = [graph.degree(v) for v in range(graph.n)]
    looped = {e.u for e in graph.edges if e.u == e.v}
    sums: Set[int] = set()
    seen: Set[tuple] = set()

    def extend(vertex: int, blocked: int, total: int) -> None:
        state = (vertex, blocked >> vertex, total)
        if state in seen:
            return
        seen.add(state)
        if vertex == graph.n:
            sums.add(total)
            return
        extend(vertex + 1, blocked, total)
        if not blocked >> vertex & 1 and vertex not in looped:
            extend(vertex + 1, blocked | masks[vertex], total + degrees[vertex])

    extend(0, 0, 0)
    return sums


def two_color_bad_spectrum(graph: Graph) -> Set[int]:
    """Bad-edge counts achieved by some coloring with two colors."""
    return bad_count_spectrum(graph, 2)
