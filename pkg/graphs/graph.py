"""Multigraph representation with deletion, contraction and structural predicates."""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from core.config import get_config
from core.exceptions import GraphError
from core.guards import check_guard


class Edge(NamedTuple):
    """Edge with a dense id; u == v is a loop."""

    id: int
    u: int
    v: int


class ComponentPartition(NamedTuple):
    """Component index per vertex, numbered 0..count-1 in order of first vertex."""

    labels: Tuple[int, ...]
    count: int

    def blocks(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.count)]
        for vertex, label in enumerate(self.labels):
            out[label].append(vertex)
        return out


class Bipartition(NamedTuple):
    """Two-sided vertex partition with no edge inside a side."""

    left: FrozenSet[int]
    right: FrozenSet[int]


@dataclass(frozen=True)
class Graph:
    """
    Immutable finite multigraph on vertices 0..n-1.

    Loops and parallel edges are allowed. Edge ids are exactly 0..m-1 in storage order.
    """

    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        for index, edge in enumerate(self.edges):
            if edge.id != index:
                raise GraphError(f"edge ids must be dense, found id {edge.id} at {index}")
            if not (0 <= edge.u < self.n and 0 <= edge.v < self.n):
                raise GraphError(
                    f"endpoint out of range in pair ({edge.u}, {edge.v}) for n={self.n}"
                )

    @property
    def m(self) -> int:
        return len(self.edges)

    def pairs(self) -> List[Tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges]

    def edge(self, e: int) -> Edge:
        if not 0 <= e < self.m:
            raise GraphError(f"unknown edge id {e} (m={self.m})")
        return self.edges[e]

    def degree(self, vertex: int) -> int:
        """Degree with multiplicity; a loop contributes 2."""
        return sum((e.u == vertex) + (e.v == vertex) for e in self.edges)

    def loop_count(self) -> int:
        return sum(1 for e in self.edges if e.u == e.v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.pairs()})"


def new_graph(n: int, endpoint_pairs: Iterable[Sequence[int]]) -> Graph:
    """
    Build a graph with edge ids assigned in input order.

    Args:
        n: Vertex count
        endpoint_pairs: (u, v) pairs, 0-based

    Raises:
        GraphError: naming the first pair with an endpoint outside 0..n-1
    """
    edges = []
    for index, pair in enumerate(endpoint_pairs):
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in pair ({u}, {v}) for n={n}")
        edges.append(Edge(index, u, v))
    return Graph(n, tuple(edges))


def surviving_edge_map(m: int, removed: Iterable[int]) -> Dict[int, int]:
    """Old id -> new id for the edges that survive removal of ``removed``."""
    gone = set(removed)
    mapping: Dict[int, int] = {}
    for old in range(m):
        if old not in gone:
            mapping[old] = len(mapping)
    return mapping


def remove_edges(graph: Graph, removed: Iterable[int]) -> Graph:
    gone = set(removed)
    for e in gone:
        graph.edge(e)
    return new_graph(graph.n, [(e.u, e.v) for e in graph.edges if e.id not in gone])


def delete_edge(graph: Graph, e: int) -> Graph:
    """G minus edge e; remaining ids follow surviving_edge_map(m, [e])."""
    graph.edge(e)
    return remove_edges(graph, [e])


def merge_vertices(graph: Graph, a: int, b: int, drop: Iterable[int] = ()) -> Graph:
    """
    Identify vertices a and b, keeping every edge not listed in ``drop``.

    The merged vertex takes the smaller label; labels above the larger one shift down.
    """
    if a == b:
        return remove_edges(graph, drop)
    keep, gone = min(a, b), max(a, b)

    def relabel(x: int) -> int:
        if x == gone:
            return keep
        return x - 1 if x > gone else x

    skipped = set(drop)
    pairs = [(relabel(e.u), relabel(e.v)) for e in graph.edges if e.id not in skipped]
    return new_graph(graph.n - 1, pairs)


def contract_edge(graph: Graph, e: int) -> Graph:
    """
    G/e: merge the endpoints of e, keeping all other edges.

    Contracting a loop deletes it. Remaining ids follow surviving_edge_map(m, [e]).
    """
    edge = graph.edge(e)
    if edge.u == edge.v:
        return delete_edge(graph, e)
    return merge_vertices(graph, edge.u, edge.v, drop=[e])


def components(graph: Graph, edge_ids: Optional[Iterable[int]] = None) -> ComponentPartition:
    """
    Connected components of (V, X), X = all edges by default.

    Args:
        graph: Input graph
        edge_ids: Restrict connectivity to these edges
    """
    parent = list(range(graph.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    selected = graph.edges if edge_ids is None else [graph.edge(e) for e in edge_ids]
    for edge in selected:
        ru, rv = find(edge.u), find(edge.v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    labels: List[int] = []
    seen: Dict[int, int] = {}
    for vertex in range(graph.n):
        root = find(vertex)
        if root not in seen:
            seen[root] = len(seen)
        labels.append(seen[root])
    return ComponentPartition(tuple(labels), len(seen))


def rank(graph: Graph, edge_ids: Optional[Iterable[int]] = None) -> int:
    """Vertices minus components."""
    return graph.n - components(graph, edge_ids).count


def is_connected(graph: Graph) -> bool:
    return components(graph).count <= 1


def is_loop(graph: Graph, e: int) -> bool:
    edge = graph.edge(e)
    return edge.u == edge.v


def is_bridge(graph: Graph, e: int) -> bool:
    """True iff deleting e increases the component count."""
    if is_loop(graph, e):
        return False
    return components(delete_edge(graph, e)).count > components(graph).count


def contract_set(graph: Graph, edge_ids: Iterable[int]) -> Graph:
    """
    G/X: merge each component of (V, X) to one vertex.

    Edges with both ends in one part are discarded; all others are kept, possibly parallel.
    """
    partition = components(graph, edge_ids)
    labels = partition.labels
    pairs = [(labels[e.u], labels[e.v]) for e in graph.edges if labels[e.u] != labels[e.v]]
    return new_graph(partition.count, pairs)


def simplify(graph: Graph) -> Graph:
    """Underlying simple graph: loops dropped, parallel edges collapsed."""
    seen = set()
    pairs = []
    for e in graph.edges:
        if e.u == e.v:
            continue
        key = (min(e.u, e.v), max(e.u, e.v))
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    return new_graph(graph.n, pairs)


def induced_subgraph(graph: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled 0..len-1 in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    pairs = [
        (index[e.u], index[e.v]) for e in graph.edges if e.u in index and e.v in index
    ]
    return new_graph(len(vertices), pairs)


def component_subgraphs(graph: Graph) -> List[Graph]:
    return [induced_subgraph(graph, block) for block in components(graph).blocks()]


def adjacency_masks(graph: Graph) -> List[int]:
    """Neighbour bitmask per vertex of the underlying simple graph."""
    masks = [0] * graph.n
    for e in graph.edges:
        if e.u != e.v:
            masks[e.u] |= 1 << e.v
            masks[e.v] |= 1 << e.u
    return masks


def edge_connectivity(graph: Graph) -> int:
    """
    Minimum number of edges whose removal disconnects G.

    Exhaustive search over non-loop edge subsets up to the minimum degree. Loops never
    count; parallel edges count with multiplicity. Disconnected or single-vertex input
    gives 0.
    """
    if graph.n < 2 or not is_connected(graph):
        return 0
    check_guard("max_edges", graph.m, get_config().engine.max_edges)

    plain = [e.id for e in graph.edges if e.u != e.v]
    min_degree = min(
        sum((e.u == v) + (e.v == v) for e in graph.edges if e.u != e.v) for v in range(graph.n)
    )
    for size in range(1, min_degree):
        for cut in combinations(plain, size):
            if components(remove_edges(graph, cut)).count > 1:
                return size
    return min_degree


def is_bipartite(graph: Graph) -> Optional[Bipartition]:
    """
    A bipartition with no edge inside a side, or None. Any loop forces None.

    Each component is 2-colored from its smallest vertex, which goes to the left side.
    """
    side: List[Optional[int]] = [None] * graph.n
    neighbours: List[List[int]] = [[] for _ in range(graph.n)]
    for e in graph.edges:
        if e.u == e.v:
            return None
        neighbours[e.u].append(e.v)
        neighbours[e.v].append(e.u)

    for start in range(graph.n):
        if side[start] is not None:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in neighbours[x]:
                if side[y] is None:
                    side[y] = 1 - side[x]  # type: ignore[operator]
                    stack.append(y)
                elif side[y] == side[x]:
                    return None

    left = frozenset(v for v in range(graph.n) if side[v] == 0)
    right = frozenset(v for v in range(graph.n) if side[v] == 1)
    return Bipartition(left, right)


def clique_number(graph: Graph) -> int:
    """Size of a largest clique in the underlying simple graph (0 for n = 0)."""
    masks = adjacency_masks(graph)
    best = 0

    def expand(candidates: int, size: int) -> None:
        nonlocal best
        if size + bin(candidates).count("1") <= best:
            return
        if not candidates:
            best = max(best, size)
            return
        while candidates:
            if size + bin(candidates).count("1") <= best:
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates &= ~low
            expand(candidates & masks[v], size + 1)

    expand((1 << graph.n) - 1, 0)
    return best
