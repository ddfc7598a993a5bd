"""
Graph family generators and the ``kind:params`` family syntax.

Wheels follow the n-vertex convention: W_n is a hub (vertex 0) joined to every vertex of
a rim cycle on 1..n-1, so it has n vertices and 2n - 2 edges and needs n >= 4. Much of the
literature calls this graph W_{n-1}.
"""

import heapq
import random
from itertools import combinations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from core.exceptions import FamilyError
from core.logger import get_logger
from data.models import FamilyKind, FamilySpec
from graphs import Graph, new_graph

logger = get_logger(__name__)

MAX_ALL_GRAPHS_N = 6
MAX_ALL_TREES_N = 9


def path_graph(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Hub 0 joined to leaves 1..n-1."""
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return new_graph(n, [(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def wheel_graph(n: int) -> Graph:
    """W_n on n vertices: spokes (0, i) first, then the rim 1-2-...-(n-1)-1."""
    _require(n >= 4, f"wheel needs n >= 4 (hub plus a rim of at least 3), got {n}")
    spokes = [(0, i) for i in range(1, n)]
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(n - 1, 1)]
    return new_graph(n, spokes + rim)


def complete_graph(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return new_graph(n, list(combinations(range(n), 2)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b} with sides 0..a-1 and a..a+b-1."""
    _require(a >= 1 and b >= 1, f"kbipartite needs a, b >= 1, got {a},{b}")
    return new_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prufer_decode(n: int, sequence: Sequence[int]) -> Graph:
    """Labeled tree on n >= 2 vertices from a Prufer sequence of length n - 2."""
    _require(len(sequence) == n - 2, f"Prufer sequence for n={n} needs length {n - 2}")
    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)

    pairs = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        pairs.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    pairs.append((u, v))
    return new_graph(n, pairs)


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labeled tree via a seeded Prufer sequence."""
    _require(n >= 1, f"randomtree needs n >= 1, got {n}")
    if n == 1:
        return new_graph(1, [])
    rng = random.Random(seed)
    return prufer_decode(n, [rng.randrange(n) for _ in range(n - 2)])


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) simple graphs on 0..n-1; bit i of the mask selects the i-th pair."""
    _require(1 <= n <= MAX_ALL_GRAPHS_N, f"allgraphs needs 1 <= n <= {MAX_ALL_GRAPHS_N}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield new_graph(n, [pair for i, pair in enumerate(pairs) if mask >> i & 1])


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees, in Prufer-sequence order."""
    _require(1 <= n <= MAX_ALL_TREES_N, f"alltrees needs 1 <= n <= {MAX_ALL_TREES_N}")
    if n == 1:
        yield new_graph(1, [])
        return
    for sequence in product(range(n), repeat=n - 2):
        yield prufer_decode(n, sequence)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FamilyError(message)


# ----------------------------------------------------------------------
# Family syntax
# ----------------------------------------------------------------------

_ARITY = {
    FamilyKind.PATH: (1, 1),
    FamilyKind.STAR: (1, 1),
    FamilyKind.CYCLE: (1, 1),
    FamilyKind.WHEEL: (1, 1),
    FamilyKind.COMPLETE: (1, 1),
    FamilyKind.COMPLETE_BIPARTITE: (2, 2),
    FamilyKind.RANDOM_TREE: (1, 2),
    FamilyKind.ALL_LABELED_GRAPHS: (1, 1),
    FamilyKind.ALL_LABELED_TREES: (1, 1),
}


def _parse_int(text: str, source: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise FamilyError(f"family parameter is not an integer: {text!r} in {source!r}")


def parse_family(text: str, seed: Optional[int] = None) -> List[FamilySpec]:
    """
    Parse ``kind:params``; a single-parameter family also accepts a range ``lo..hi``.

    Examples: ``wheel:6``, ``wheel:4..8``, ``kbipartite:3,4``, ``randomtree:9,42``.
    ``seed`` fills in a missing randomtree seed.

    Raises:
        FamilyError: on an unknown kind or malformed parameters
    """
    source = text.strip()
    kind_text, _, params_text = source.partition(":")
    try:
        kind = FamilyKind(kind_text.strip().lower())
    except ValueError:
        known = ", ".join(k.value for k in FamilyKind)
        raise FamilyError(f"unknown family {kind_text!r}; expected one of {known}")
    if not params_text:
        raise FamilyError(f"family {source!r} is missing parameters")

    low, high = _ARITY[kind]
    if ".." in params_text:
        if high != 1 and kind != FamilyKind.RANDOM_TREE:
            raise FamilyError(f"ranges need a single-parameter family: {source!r}")
        start_text, _, stop_text = params_text.partition("..")
        start, stop = _parse_int(start_text, source), _parse_int(stop_text, source)
        if start > stop:
            raise FamilyError(f"empty range in {source!r}")
        values = [[v] for v in range(start, stop + 1)]
    else:
        values = [[_parse_int(p, source) for p in params_text.split(",")]]

    specs = []
    for params in values:
        if kind == FamilyKind.RANDOM_TREE and len(params) == 1:
            params = params + [seed if seed is not None else 0]
        if not low <= len(params) <= high:
            raise FamilyError(f"family {kind.value} takes {low}..{high} parameters: {source!r}")
        try:
            specs.append(FamilySpec(kind=kind, params=params))
        except ValueError as e:
            raise FamilyError(f"invalid family {source!r}: {e}")
    return specs


def generate(spec: FamilySpec) -> List[Graph]:
    """
    Graphs of one family instance, deterministically ordered.

    Single-graph families return a one-element list.

    Raises:
        FamilyError: if a parameter is out of range for the family
    """
    p = spec.params
    kind = spec.kind
    if kind == FamilyKind.PATH:
        return [path_graph(p[0])]
    if kind == FamilyKind.STAR:
        return [star_graph(p[0])]
    if kind == FamilyKind.CYCLE:
        return [cycle_graph(p[0])]
    if kind == FamilyKind.WHEEL:
        return [wheel_graph(p[0])]
    if kind == FamilyKind.COMPLETE:
        return [complete_graph(p[0])]
    if kind == FamilyKind.COMPLETE_BIPARTITE:
        return [complete_bipartite_graph(p[0], p[1])]
    if kind == FamilyKind.RANDOM_TREE:
        return [random_tree(p[0], p[1] if len(p) > 1 else 0)]
    if kind == FamilyKind.ALL_LABELED_GRAPHS:
        return list(all_labeled_graphs(p[0]))
    return list(all_labeled_trees(p[0]))


def corpus(texts: Sequence[str], seed: Optional[int] = None) -> List[Tuple[FamilySpec, Graph]]:
    """Every graph of every family text, tagged with the instance that produced it."""
    items = []
    for text in texts:
        for spec in parse_family(text, seed):
            items.extend((spec, graph) for graph in generate(spec))
    logger.debug("Corpus built", families=list(texts), size=len(items))
    return items
