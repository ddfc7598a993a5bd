"""Flats (closed edge sets) and the closed-set summation engine."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from core.config import get_config
from core.exceptions import GraphError
from core.guards import check_guard
from core.logger import get_logger
from graphs import ComponentPartition, Graph, components, contract_set, is_connected
from graphs.graph import induced_subgraph
from polynomial import Poly, smallest_positive_support

from .cache import RecursionCache
from .recursion import chromatic_poly, check_engine_size

logger = get_logger(__name__)


@dataclass(frozen=True)
class Flat:
    """A closed edge set together with the vertex partition of (V, X)."""

    edges: FrozenSet[int]
    partition: ComponentPartition

    @property
    def size(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> List[int]:
        return sorted(self.edges)


def is_closed(graph: Graph, edge_ids: Iterable[int]) -> bool:
    """True iff every edge inside a component of (V, X) belongs to X."""
    chosen = set(edge_ids)
    labels = components(graph, chosen).labels
    return all(e.id in chosen for e in graph.edges if labels[e.u] == labels[e.v])


def _check_k(graph: Graph, k: int) -> None:
    if not 0 <= k <= graph.m:
        raise GraphError(f"k out of range: {k} not in 0..{graph.m}")


def flats_of_size(graph: Graph, k: int) -> List[Flat]:
    """
    All flats with exactly k edges, by scanning every k-subset.

    Raises:
        GraphError: if k is outside 0..m
        GuardError: if C(m, k) exceeds the flat-subset guard
    """
    _check_k(graph, k)
    check_guard("max_flat_subsets", comb(graph.m, k), get_config().engine.max_flat_subsets)

    found = []
    for subset in combinations(range(graph.m), k):
        if is_closed(graph, subset):
            found.append(Flat(frozenset(subset), components(graph, subset)))
    return found


def _set_partitions(n: int) -> Iterator[List[int]]:
    """Restricted growth strings: block label per vertex, labels in first-use order."""
    labels = [0] * n

    def assign(vertex: int, used: int) -> Iterator[List[int]]:
        if vertex == n:
            yield list(labels)
            return
        for block in range(used + 1):
            labels[vertex] = block
            yield from assign(vertex + 1, max(used, block + 1))

    if n == 0:
        yield []
        return
    yield from assign(1, 1)


def bell_number(n: int) -> int:
    """Number of set partitions of n items (Bell triangle)."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def _use_partitions(graph: Graph) -> bool:
    """Partition enumeration when allowed and no larger than the 2^m subset scan."""
    limits = get_config().engine
    if graph.n > limits.max_partition_vertices:
        return False
    subsets = 2**graph.m
    if subsets > limits.max_flat_subsets:
        return True
    return bell_number(graph.n) <= subsets


def all_flats(graph: Graph) -> List[Flat]:
    """
    Every flat of G, sorted by size then edge ids.

    Flats correspond one-to-one to vertex partitions whose blocks induce connected
    subgraphs: the flat is the set of edges with both ends inside one block. Sparse graphs
    with more partitions than edge subsets are enumerated by a single 2^m subset scan.

    Raises:
        GuardError: when both the partition vertex guard and the subset guard are exceeded
    """
    if _use_partitions(graph):
        return list(_partition_flats(graph))
    check_guard("max_flat_subsets", 2**graph.m, get_config().engine.max_flat_subsets)
    return list(_subset_flats(graph))


@lru_cache(maxsize=512)
def _subset_flats(graph: Graph) -> Tuple[Flat, ...]:
    found = []
    for k in range(graph.m + 1):
        for subset in combinations(range(graph.m), k):
            if is_closed(graph, subset):
                found.append(Flat(frozenset(subset), components(graph, subset)))
    return tuple(found)


@lru_cache(maxsize=512)
def _partition_flats(graph: Graph) -> Tuple[Flat, ...]:
    found = []
    for labels in _set_partitions(graph.n):
        count = max(labels, default=-1) + 1
        blocks: List[List[int]] = [[] for _ in range(count)]
        for vertex, block in enumerate(labels):
            blocks[block].append(vertex)
        if not all(is_connected(induced_subgraph(graph, block)) for block in blocks):
            continue
        edges = frozenset(e.id for e in graph.edges if labels[e.u] == labels[e.v])
        found.append(Flat(edges, ComponentPartition(tuple(labels), count)))

    found.sort(key=lambda flat: (flat.size, flat.sorted_edges()))
    return tuple(found)


def _enumerable(graph: Graph) -> bool:
    limits = get_config().engine
    return _use_partitions(graph) or 2**graph.m <= limits.max_flat_subsets


def _flats_with_fallback(graph: Graph, k: int) -> List[Flat]:
    """All flats at once when enumerable, the guarded per-k subset scan otherwise."""
    _check_k(graph, k)
    if _enumerable(graph):
        return [flat for flat in all_flats(graph) if flat.size == k]
    logger.debug("Too many flats to enumerate at once, scanning k-subsets", n=graph.n, k=k)
    return flats_of_size(graph, k)


def feasible_k(graph: Graph) -> Set[int]:
    """Sizes k for which G has a flat of size k."""
    if _enumerable(graph):
        return {flat.size for flat in all_flats(graph)}
    return {k for k in range(graph.m + 1) if flats_of_size(graph, k)}


@lru_cache(maxsize=8192)
def _minor_chromatic(graph: Graph, edges: FrozenSet[int], cache: RecursionCache) -> Poly:
    """chi(G/X); shared by the flat sum and the flat minimum within one table."""
    return chromatic_poly(contract_set(graph, edges), cache)


def defect_poly_flats(
    graph: Graph, k: int, cache: Optional[RecursionCache] = None
) -> Poly:
    """
    phi_k(G; lambda) as the sum of chi(G/X; lambda) over flats X of size k.

    Raises:
        GraphError: if k is outside 0..m
    """
    check_engine_size(graph)
    cache = cache if cache is not None else RecursionCache()
    total = Poly.zero()
    for flat in _flats_with_fallback(graph, k):
        total = total + _minor_chromatic(graph, flat.edges, cache)
    return total


def defect_number_by_flats(
    graph: Graph, k: int, cache: Optional[RecursionCache] = None
) -> int:
    """Least chromatic number of G/X over flats X of size k; 0 when there is none."""
    if k < 0:
        raise GraphError(f"k must be non-negative, got {k}")
    if k > graph.m:
        return 0
    cache = cache if cache is not None else RecursionCache()
    best = 0
    for flat in _flats_with_fallback(graph, k):
        minor_poly = _minor_chromatic(graph, flat.edges, cache)
        chi = smallest_positive_support(minor_poly, max(flat.partition.count, 1))
        if chi and (best == 0 or chi < best):
            best = chi
    return best
