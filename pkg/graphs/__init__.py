"""Multigraph representation, canonical keys and input formats."""

from .canonical import canonical_key
from .graph import (
    Bipartition,
    ComponentPartition,
    Edge,
    Graph,
    clique_number,
    components,
    contract_edge,
    contract_set,
    delete_edge,
    edge_connectivity,
    is_bipartite,
    is_bridge,
    is_connected,
    is_loop,
    new_graph,
    rank,
    simplify,
    surviving_edge_map,
)
from .io import load_graph, parse_edge_list, parse_graph6, to_edge_list, to_graph6

__all__ = [
    "Graph",
    "Edge",
    "ComponentPartition",
    "Bipartition",
    "new_graph",
    "delete_edge",
    "contract_edge",
    "contract_set",
    "surviving_edge_map",
    "components",
    "rank",
    "is_connected",
    "is_loop",
    "is_bridge",
    "edge_connectivity",
    "is_bipartite",
    "clique_number",
    "simplify",
    "canonical_key",
    "parse_edge_list",
    "parse_graph6",
    "to_edge_list",
    "to_graph6",
    "load_graph",
]
