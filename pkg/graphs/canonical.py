"""Canonical keys for small multigraphs (memoization keys for the recursion engines)."""

from typing import Dict, List, Optional, Sequence, Tuple

from core.config import get_config

from .graph import Graph


def multiplicity_matrix(graph: Graph) -> List[List[int]]:
    """Symmetric edge-count matrix; the diagonal holds loop counts."""
    matrix = [[0] * graph.n for _ in range(graph.n)]
    for e in graph.edges:
        matrix[e.u][e.v] += 1
        if e.u != e.v:
            matrix[e.v][e.u] += 1
    return matrix


def _rank(keys: Sequence) -> List[int]:
    ranking = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [ranking[key] for key in keys]


def _refine(matrix: List[List[int]], colors: List[int]) -> List[int]:
    """Colour refinement until stable; cell order is preserved."""
    n = len(colors)
    while True:
        signatures = [
            (
                colors[v],
                tuple(
                    sorted((colors[w], matrix[v][w]) for w in range(n) if w != v and matrix[v][w])
                ),
            )
            for v in range(n)
        ]
        refined = _rank(signatures)
        if max(refined, default=-1) == max(colors, default=-1):
            return refined
        colors = refined


def _twin_classes(matrix: List[List[int]]) -> List[int]:
    """
    Class id per vertex; u and v share a class iff swapping them is an automorphism.

    That holds when their loop counts agree and their rows agree outside {u, v}.
    """
    n = len(matrix)
    classes = list(range(n))
    for v in range(n):
        for u in range(v):
            if classes[u] != u:
                continue
            if matrix[u][u] == matrix[v][v] and all(
                matrix[u][w] == matrix[v][w] for w in range(n) if w != u and w != v
            ):
                classes[v] = u
                break
    return classes


def canonical_form(graph: Graph) -> Tuple[int, ...]:
    """
    Lexicographically least adjacency certificate over the explored orderings.

    Branches individualize one vertex per twin class of the first non-singleton cell,
    refining after each choice.
    """
    matrix = multiplicity_matrix(graph)
    n = graph.n
    twins = _twin_classes(matrix)
    best: Optional[Tuple[int, ...]] = None

    def search(colors: List[int]) -> None:
        nonlocal best
        cells: Dict[int, List[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        open_cells = [c for c in sorted(cells) if len(cells[c]) > 1]
        if not open_cells:
            order = sorted(range(n), key=colors.__getitem__)
            certificate = tuple(matrix[a][b] for a in order for b in order)
            if best is None or certificate < best:
                best = certificate
            return

        tried = set()
        for v in cells[open_cells[0]]:
            if twins[v] in tried:
                continue
            tried.add(twins[v])
            individualized = _rank([(c, 0 if w == v else 1) for w, c in enumerate(colors)])
            search(_refine(matrix, individualized))

    search(_refine(matrix, _rank([matrix[v][v] for v in range(n)])))
    return best if best is not None else ()


def canonical_key(graph: Graph) -> Optional[bytes]:
    """
    Key equal for two multigraphs iff they are isomorphic (loops and multiplicities kept).

    Returns None above the configured vertex limit; callers then skip memoization.
    """
    if graph.n > get_config().engine.canonical_max_vertices:
        return None
    form = canonical_form(graph)
    return f"{graph.n}:{','.join(map(str, form))}".encode()
