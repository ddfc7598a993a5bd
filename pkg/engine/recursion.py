"""
Deletion-contraction engines.

``chromatic_poly`` runs the classic recursion on the underlying simple graph.
``defect_vector_dc`` runs the bivariate recursion on B(G; lambda, t) = sum_k phi_k t^k,
which yields every k-defect polynomial in one traversal:

    loop e            B(G) = t * B(G \\ e)
    other edge e      B(G) = B(G \\ e) + (t - 1) * B(G / e)
    edgeless G        B(G) = lambda^n

A whole parallel class of p edges between u and v is handled in one step with the factor
(t^p - 1), and components multiply.
"""

from typing import List, Optional, Sequence, Tuple

from core.config import get_config
from core.guards import check_guard
from core.logger import get_logger
from graphs import Graph, canonical_key, components, simplify
from graphs.graph import induced_subgraph, merge_vertices, remove_edges
from polynomial import Poly, falling_factorial

from .cache import RecursionCache

logger = get_logger(__name__)

DefectVector = Tuple[Poly, ...]


def check_engine_size(graph: Graph) -> None:
    """Vertex and edge guards shared by every polynomial engine."""
    limits = get_config().engine
    check_guard("max_vertices", graph.n, limits.max_vertices)
    check_guard("max_edges", graph.m, limits.max_edges)


# ----------------------------------------------------------------------
# Chromatic polynomial
# ----------------------------------------------------------------------


def chromatic_poly(graph: Graph, cache: Optional[RecursionCache] = None) -> Poly:
    """
    Exact chromatic polynomial chi(G; lambda).

    Any loop gives the zero polynomial; parallel edges collapse to one.

    Raises:
        GuardError: above the vertex or edge guard
    """
    check_engine_size(graph)
    if graph.loop_count():
        return Poly.zero()
    return _chromatic(simplify(graph), cache if cache is not None else RecursionCache())


def _chromatic(graph: Graph, cache: RecursionCache) -> Poly:
    n, m = graph.n, graph.m
    if m == 0:
        return Poly.monomial(n)

    partition = components(graph)
    if partition.count > 1:
        result = Poly.constant(1)
        for block in partition.blocks():
            result = result * _chromatic(induced_subgraph(graph, block), cache)
        return result

    if m == n * (n - 1) // 2:
        return falling_factorial(n - 1)
    if m == n - 1:
        return Poly.lam() * Poly.linear(1) ** (n - 1)

    key = canonical_key(graph) if cache.enabled else None
    cached = cache.get("chromatic", key)
    if cached is not None:
        return cached

    edge = graph.edges[_pivot_edge(graph)]
    deleted = remove_edges(graph, [edge.id])
    merged = simplify(merge_vertices(graph, edge.u, edge.v, drop=[edge.id]))
    result = _chromatic(deleted, cache) - _chromatic(merged, cache)

    cache.put("chromatic", key, result)
    return result


def _pivot_edge(graph: Graph) -> int:
    """An edge at a vertex of least positive degree (keeps both branches small)."""
    degrees = [0] * graph.n
    for e in graph.edges:
        degrees[e.u] += 1
        degrees[e.v] += 1
    vertex = min((v for v in range(graph.n) if degrees[v]), key=degrees.__getitem__)
    return next(e.id for e in graph.edges if vertex in (e.u, e.v))


# ----------------------------------------------------------------------
# Bivariate helpers: a list indexed by the power of t, each entry a Poly in lambda
# ----------------------------------------------------------------------


def _trim(vector: List[Poly]) -> List[Poly]:
    while vector and vector[-1].is_zero():
        vector.pop()
    return vector


def bivariate_add(a: Sequence[Poly], b: Sequence[Poly]) -> List[Poly]:
    size = max(len(a), len(b))
    out = [Poly.zero()] * size
    for i in range(size):
        if i < len(a):
            out[i] = out[i] + a[i]
        if i < len(b):
            out[i] = out[i] + b[i]
    return _trim(out)


def bivariate_mul(a: Sequence[Poly], b: Sequence[Poly]) -> List[Poly]:
    if not a or not b:
        return []
    out = [Poly.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def bivariate_shift(a: Sequence[Poly], power: int) -> List[Poly]:
    """Multiply by t^power."""
    if not a:
        return []
    return [Poly.zero()] * power + list(a)


def pad_vector(vector: Sequence[Poly], length: int) -> DefectVector:
    """Pad with zero polynomials to ``length`` entries (k = 0..m)."""
    return tuple(vector) + (Poly.zero(),) * (length - len(vector))


# ----------------------------------------------------------------------
# Bivariate recursion
# ----------------------------------------------------------------------


def defect_vector_dc(graph: Graph, cache: Optional[RecursionCache] = None) -> DefectVector:
    """
    All k-defect polynomials phi_0..phi_m by the bivariate recursion.

    Returns:
        Tuple of m + 1 polynomials, index k

    Raises:
        GuardError: above the vertex or edge guard
    """
    check_engine_size(graph)
    cache = cache if cache is not None else RecursionCache()
    vector = _bivariate(graph, cache)
    logger.debug("Bivariate recursion finished", n=graph.n, m=graph.m, **cache.stats())
    return pad_vector(vector, graph.m + 1)


def _bivariate(graph: Graph, cache: RecursionCache) -> List[Poly]:
    if graph.m == 0:
        return [Poly.monomial(graph.n)]

    loops = [e.id for e in graph.edges if e.u == e.v]
    if loops:
        return bivariate_shift(_bivariate(remove_edges(graph, loops), cache), len(loops))

    partition = components(graph)
    if partition.count > 1:
        blocks = partition.blocks()
        isolated = sum(1 for block in blocks if len(block) == 1)
        result = [Poly.monomial(isolated)]
        for block in blocks:
            if len(block) > 1:
                result = bivariate_mul(result, _bivariate(induced_subgraph(graph, block), cache))
        return result

    key = canonical_key(graph) if cache.enabled else None
    cached = cache.get("bivariate", key)
    if cached is not None:
        return list(cached)

    pivot = graph.edges[_pivot_edge(graph)]
    u, v = pivot.u, pivot.v
    parallel = [e.id for e in graph.edges if {e.u, e.v} == {u, v}]

    deleted = _bivariate(remove_edges(graph, parallel), cache)
    merged = _bivariate(merge_vertices(graph, u, v, drop=parallel), cache)
    # (t^p - 1) * B(merged)
    factor = bivariate_add(bivariate_shift(merged, len(parallel)), [-x for x in merged])
    result = bivariate_add(deleted, factor)

    cache.put("bivariate", key, tuple(result))
    return result
