"""Exhaustive coloring oracle."""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from core.config import get_config
from core.exceptions import GraphError
from core.guards import check_guard
from core.logger import get_logger
from graphs import Graph
from polynomial import interpolate

from .recursion import DefectVector, check_engine_size

logger = get_logger(__name__)


@dataclass(frozen=True)
class Coloring:
    """
    Vertex coloring with colors 1..colors.

    ``assignment[v]`` is the color of vertex v; ``bad_edges`` lists the ids of the edges
    whose endpoints share a color (loops always).
    """

    assignment: Tuple[int, ...]
    colors: int
    bad_edges: Tuple[int, ...]

    @property
    def bad_count(self) -> int:
        return len(self.bad_edges)


def bad_edges(graph: Graph, assignment: Sequence[int]) -> Tuple[int, ...]:
    """Ids of edges with both endpoints the same color."""
    if len(assignment) != graph.n:
        raise GraphError(f"coloring covers {len(assignment)} vertices, graph has {graph.n}")
    return tuple(e.id for e in graph.edges if assignment[e.u] == assignment[e.v])


def _check_colorings(colors: int, n: int) -> None:
    check_guard("max_colorings", colors**n, get_config().engine.max_colorings)


def _assignments(n: int, colors: int, pin_first: bool) -> Iterator[Tuple[int, ...]]:
    """All color tuples over 0..colors-1; pinning fixes vertex 0 to color 0."""
    if n == 0:
        yield ()
        return
    if pin_first:
        for rest in product(range(colors), repeat=n - 1):
            yield (0,) + rest
    else:
        yield from product(range(colors), repeat=n)


def _bad_count(ends: List[Tuple[int, int]], assignment: Tuple[int, ...]) -> int:
    return sum(1 for u, v in ends if assignment[u] == assignment[v])


def brute_force_vector(graph: Graph, lam: int) -> List[int]:
    """
    Number of lam-colorings with exactly k bad edges, for k = 0..m.

    Colors are interchangeable, so only colorings with vertex 0 on the first color are
    enumerated and every count is multiplied by lam.

    Raises:
        GuardError: if lam^n exceeds the coloring guard
    """
    if lam < 0:
        raise GraphError(f"color count must be non-negative, got {lam}")
    counts = [0] * (graph.m + 1)
    if graph.n == 0:
        counts[0] = 1
        return counts
    if lam == 0:
        return counts
    _check_colorings(lam, graph.n)

    ends = [(e.u, e.v) for e in graph.edges]
    for assignment in _assignments(graph.n, lam, pin_first=True):
        counts[_bad_count(ends, assignment)] += 1
    return [lam * c for c in counts]


def defect_vector_oracle(graph: Graph) -> DefectVector:
    """
    All k-defect polynomials by interpolating oracle counts at lambda = 0..n.

    Raises:
        GuardError: if n^n exceeds the coloring guard
    """
    check_engine_size(graph)
    _check_colorings(max(graph.n, 1), graph.n)
    samples = [brute_force_vector(graph, lam) for lam in range(graph.n + 1)]
    return tuple(
        interpolate([sample[k] for sample in samples]) for k in range(graph.m + 1)
    )


def bad_count_spectrum(graph: Graph, colors: int) -> Set[int]:
    """Bad-edge counts achieved by at least one coloring with at most ``colors`` colors."""
    if colors < 1:
        raise GraphError(f"color count must be positive, got {colors}")
    _check_colorings(colors, graph.n)
    ends = [(e.u, e.v) for e in graph.edges]
    return {_bad_count(ends, a) for a in _assignments(graph.n, colors, pin_first=True)}


def min_bad_edges(graph: Graph, colors: int) -> int:
    """
    Fewest bad edges over all colorings with ``colors`` colors.

    Raises:
        GraphError: if colors < 1
        GuardError: if colors^n exceeds the coloring guard
    """
    return min(bad_count_spectrum(graph, colors))


def oracle_defect_number(graph: Graph, k: int, max_colors: Optional[int] = None) -> int:
    """
    Least t such that some t-coloring has exactly k bad edges, searching t = 1..max_colors.

    Returns 0 when no t in range works; max_colors defaults to max(n, 1).
    """
    if k < 0:
        raise GraphError(f"k must be non-negative, got {k}")
    if k > graph.m:
        return 0
    limit = max(graph.n, 1) if max_colors is None else max_colors
    for colors in range(1, limit + 1):
        if k in bad_count_spectrum(graph, colors):
            return colors
    return 0


def find_coloring(graph: Graph, k: int, colors: int) -> Optional[Coloring]:
    """
    First coloring (in enumeration order) with exactly k bad edges using exactly ``colors``
    colors, or None.
    """
    _check_colorings(colors, graph.n)
    ends = [(e.u, e.v) for e in graph.edges]
    for assignment in _assignments(graph.n, colors, pin_first=True):
        if len(set(assignment)) != colors:
            continue
        if _bad_count(ends, assignment) == k:
            shifted = tuple(c + 1 for c in assignment)
            return Coloring(shifted, colors, bad_edges(graph, shifted))
    return None
