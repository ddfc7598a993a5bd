import pytest

from core.exceptions import GraphError
from families import all_labeled_graphs, complete_bipartite_graph, cycle_graph, wheel_graph
from graphs import (
    canonical_key,
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

DIGON = new_graph(2, [(0, 1), (0, 1)])


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def test_new_graph_assigns_ids_in_order(c3):
    assert c3.m == 3
    assert [e.id for e in c3.edges] == [0, 1, 2]


def test_loops_and_parallels_are_allowed(single_loop):
    assert single_loop.m == 1 and is_loop(single_loop, 0)
    assert DIGON.m == 2
    assert single_loop.degree(0) == 2


def test_endpoint_out_of_range_names_pair():
    with pytest.raises(GraphError, match=r"\(0, 3\)"):
        new_graph(3, [(0, 1), (0, 3)])


def test_unknown_edge_id(c3):
    with pytest.raises(GraphError, match="unknown edge id 7"):
        delete_edge(c3, 7)


# ---------------------------------------------------------------------------
# Deletion and contraction
# ---------------------------------------------------------------------------


def test_delete_edge_of_triangle_gives_path(c3):
    path = delete_edge(c3, 1)
    assert path.n == 3 and path.m == 2
    assert is_connected(path)


def test_delete_from_digon_and_loop(single_loop):
    assert delete_edge(DIGON, 0).pairs() == [(0, 1)]
    assert delete_edge(single_loop, 0).m == 0


def test_contract_triangle_edge_gives_digon(c3):
    digon = contract_edge(c3, 0)
    assert digon.n == 2
    assert sorted(tuple(sorted(p)) for p in digon.pairs()) == [(0, 1), (0, 1)]


def test_contract_digon_edge_gives_loop():
    looped = contract_edge(DIGON, 0)
    assert looped.n == 1 and looped.pairs() == [(0, 0)]


def test_contract_path_edge():
    path = new_graph(3, [(0, 1), (1, 2)])
    single = contract_edge(path, 0)
    assert single.n == 2 and single.pairs() == [(0, 1)]


def test_surviving_edge_map():
    assert surviving_edge_map(4, [1]) == {0: 0, 2: 1, 3: 2}


def test_contract_set_discards_inner_edges(k4):
    # contracting the triangle on 0, 1, 2 leaves 2 vertices joined by 3 parallel edges
    minor = contract_set(k4, [0, 1, 3])
    assert minor.n == 2
    assert minor.m == 3
    assert minor.loop_count() == 0


def test_simplify():
    multi = new_graph(3, [(0, 1), (1, 0), (2, 2), (1, 2)])
    assert simplify(multi).pairs() == [(0, 1), (1, 2)]


# ---------------------------------------------------------------------------
# Structure
# ---------------------------------------------------------------------------


def test_components_and_rank(c3, two_k2):
    assert components(c3).count == 1 and rank(c3) == 2
    edgeless = new_graph(4, [])
    assert components(edgeless).count == 4 and rank(edgeless) == 0
    assert components(two_k2).count == 2 and rank(two_k2) == 2
    assert components(two_k2).labels == (0, 0, 1, 1)


def test_components_restricted_to_edge_set(c4):
    assert components(c4, [0]).blocks() == [[0, 1], [2], [3]]


def test_bridges(single_loop):
    path = new_graph(3, [(0, 1), (1, 2)])
    assert is_bridge(path, 0) and is_bridge(path, 1)
    assert not is_bridge(DIGON, 0)
    assert is_loop(single_loop, 0) and not is_bridge(single_loop, 0)


@pytest.mark.parametrize(
    "graph, expected",
    [
        (wheel_graph(5), 3),
        (cycle_graph(6), 2),
        (new_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), 3),
        (DIGON, 2),
        (new_graph(4, [(0, 1), (2, 3)]), 0),
        (new_graph(1, []), 0),
    ],
)
def test_edge_connectivity(graph, expected):
    assert edge_connectivity(graph) == expected


def test_bipartite(c4, c5, single_loop):
    sides = is_bipartite(c4)
    assert sides is not None
    assert {sides.left, sides.right} == {frozenset({0, 2}), frozenset({1, 3})}
    assert is_bipartite(c5) is None
    assert is_bipartite(single_loop) is None

    k34 = is_bipartite(complete_bipartite_graph(3, 4))
    assert sorted([len(k34.left), len(k34.right)]) == [3, 4]


def test_clique_number(k4, c5):
    assert clique_number(k4) == 4
    assert clique_number(c5) == 2
    assert clique_number(wheel_graph(5)) == 3
    assert clique_number(new_graph(0, [])) == 0


# ---------------------------------------------------------------------------
# Minor invariants over every labeled graph
# ---------------------------------------------------------------------------

SWEEP_SIZES = [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)]
OPS = {"delete": delete_edge, "contract": contract_edge}


@pytest.mark.parametrize("n", SWEEP_SIZES)
def test_minor_operations_commute(n):
    for graph in all_labeled_graphs(n):
        for e in range(graph.m):
            after_e = surviving_edge_map(graph.m, [e])
            for f in range(graph.m):
                if f == e:
                    continue
                after_f = surviving_edge_map(graph.m, [f])
                for first, op1 in OPS.items():
                    for second, op2 in OPS.items():
                        one_way = op2(op1(graph, e), after_e[f])
                        other_way = op1(op2(graph, f), after_f[e])
                        assert canonical_key(one_way) == canonical_key(other_way), (
                            graph, e, f, first, second,
                        )


@pytest.mark.parametrize("n", SWEEP_SIZES)
def test_rank_under_deletion_and_contraction(n):
    for graph in all_labeled_graphs(n):
        r = rank(graph)
        for e in range(graph.m):
            if not is_loop(graph, e):
                assert rank(contract_edge(graph, e)) == r - 1, (graph, e)
            assert is_bridge(graph, e) == (rank(delete_edge(graph, e)) < r), (graph, e)
