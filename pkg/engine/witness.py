"""Witness colorings certifying a k-defect number."""

from typing import Optional

from core.exceptions import GraphError
from core.logger import get_logger
from graphs import Graph

from .cache import RecursionCache
from .oracle import Coloring, find_coloring
from .table import defect_number

logger = get_logger(__name__)


def witness_coloring(
    graph: Graph, k: int, cache: Optional[RecursionCache] = None
) -> Optional[Coloring]:
    """
    A coloring with exactly k bad edges using exactly phi_k(G) colors, or None when
    phi_k(G) = 0.

    Raises:
        GuardError: if phi_k(G)^n exceeds the coloring guard
    """
    if k < 0:
        raise GraphError(f"k must be non-negative, got {k}")
    colors = defect_number(graph, k, cache)
    if colors == 0:
        return None
    coloring = find_coloring(graph, k, colors)
    if coloring is None:
        # phi_k(G) >= 1 guarantees a coloring; reaching here means the engines are wrong
        raise GraphError(f"no {colors}-coloring with {k} bad edges found")
    logger.debug("Witness found", k=k, colors=colors, bad_edges=list(coloring.bad_edges))
    return coloring
