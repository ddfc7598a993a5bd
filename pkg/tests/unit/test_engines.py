import pytest

import engine.flats as flats_module
from core.config import get_config, reset_config
from core.exceptions import EngineDisagreementError, GraphError, GuardError
from engine import (
    RecursionCache,
    all_flats,
    bad_count_spectrum,
    bell_number,
    brute_force_vector,
    chromatic_poly,
    defect_number,
    defect_number_by_flats,
    defect_poly_flats,
    defect_table,
    defect_vector,
    defect_vector_dc,
    defect_vector_oracle,
    defect_vector_subset,
    feasible_k,
    flats_of_size,
    is_closed,
    min_bad_edges,
    oracle_defect_number,
    witness_coloring,
)
from families import complete_graph, cycle_graph, path_graph, star_graph, wheel_graph
from graphs import new_graph
from polynomial import Poly, falling_factorial

LAM = Poly.lam()

# a path on ten vertices plus five chords
SPARSE_TEN = [(i, i + 1) for i in range(9)] + [(0, 3), (2, 6), (4, 9), (1, 7), (5, 8)]


def shifted(power):
    """(lambda - 1)^power"""
    return Poly.linear(1) ** power


class TestChromatic:
    def test_triangle(self, c3):
        assert chromatic_poly(c3) == falling_factorial(2)

    def test_path_and_cycle(self, path4, c4):
        assert chromatic_poly(path4) == LAM * shifted(3)
        assert chromatic_poly(c4) == shifted(4) + shifted(1)

    def test_loop_gives_zero(self, single_loop):
        assert chromatic_poly(single_loop).is_zero()

    def test_parallel_edges_collapse(self):
        assert chromatic_poly(new_graph(2, [(0, 1), (0, 1)])) == LAM * shifted(1)

    def test_wheel(self):
        # hub color times the proper colorings of C4 in lambda - 1 colors
        c4_shifted = (Poly.linear(2) ** 4) + Poly.linear(2)
        assert chromatic_poly(wheel_graph(5)) == LAM * c4_shifted


class TestBivariate:
    def test_triangle(self, c3):
        phi = defect_vector_dc(c3)
        assert phi == (falling_factorial(2), 3 * LAM * shifted(1), Poly.zero(), LAM)

    def test_disjoint_edges(self, two_k2):
        phi = defect_vector_dc(two_k2)
        assert phi[0] == (LAM * shifted(1)) ** 2
        assert phi[1] == 2 * LAM**2 * shifted(1)
        assert phi[2] == LAM**2

    def test_single_loop(self, single_loop):
        assert defect_vector_dc(single_loop) == (Poly.zero(), LAM)

    def test_edgeless(self):
        assert defect_vector_dc(new_graph(3, [])) == (LAM**3,)
        assert defect_vector_dc(new_graph(0, [])) == (Poly.constant(1),)

    def test_rows_sum_to_all_colorings(self):
        graph = wheel_graph(6)
        total = Poly.zero()
        for poly in defect_vector_dc(graph):
            total = total + poly
        assert total == LAM**6

    def test_guard(self):
        with pytest.raises(GuardError) as excinfo:
            defect_vector_dc(complete_graph(8))
        assert excinfo.value.name == "max_edges"


class TestSubset:
    def test_single_edge(self, k2):
        assert defect_vector_subset(k2) == (LAM * shifted(1), LAM)

    def test_loop(self, single_loop):
        assert defect_vector_subset(single_loop) == (Poly.zero(), LAM)

    def test_agrees_with_dc_on_multigraph(self):
        graph = new_graph(4, [(0, 1), (0, 1), (1, 2), (2, 2), (2, 3), (3, 0)])
        assert defect_vector_subset(graph) == defect_vector_dc(graph)


class TestOracle:
    def test_triangle_two_colors(self, c3):
        assert brute_force_vector(c3, 2) == [0, 6, 0, 2]

    def test_single_color(self, k2):
        assert brute_force_vector(k2, 1) == [0, 1]

    def test_cycle_counts(self, c4):
        assert brute_force_vector(c4, 2)[1] == 0
        assert brute_force_vector(c4, 3)[1] == 24

    def test_zero_colors_and_empty_graph(self, c3):
        assert brute_force_vector(c3, 0) == [0, 0, 0, 0]
        assert brute_force_vector(new_graph(0, []), 3) == [1]

    def test_interpolation_matches_dc(self, c5):
        assert defect_vector_oracle(c5) == defect_vector_dc(c5)

    def test_guard(self, c5, monkeypatch):
        monkeypatch.setenv("KDEFECT_MAX_COLORINGS", "500")
        reset_config()
        with pytest.raises(GuardError, match="max_colorings"):
            brute_force_vector(c5, 4)

    @pytest.mark.parametrize("n, colors, expected", [(5, 2, 2), (6, 2, 3), (7, 2, 3)])
    def test_min_bad_edges_on_wheels(self, n, colors, expected):
        assert min_bad_edges(wheel_graph(n), colors) == expected

    def test_min_bad_edges_odd_cycle(self, c5):
        assert min_bad_edges(c5, 2) == 1
        assert min_bad_edges(c5, 3) == 0

    def test_spectrum(self, c4):
        assert bad_count_spectrum(c4, 2) == {0, 2, 4}

    def test_oracle_number(self, c5):
        assert [oracle_defect_number(c5, k) for k in range(7)] == [3, 2, 3, 2, 0, 1, 0]


class TestDefectNumber:
    @pytest.mark.parametrize("k, expected", [(0, 3), (1, 2), (2, 3), (3, 2), (4, 0), (5, 1)])
    def test_five_cycle(self, c5, k, expected):
        assert defect_number(c5, k) == expected

    def test_wheel_numbers(self):
        wheel = wheel_graph(5)
        assert [defect_number(wheel, k) for k in range(9)] == [3, 3, 2, 2, 2, 2, 0, 0, 1]

    def test_k_above_m(self, c3):
        assert defect_number(c3, 4) == 0

    def test_negative_k(self, c3):
        with pytest.raises(GraphError):
            defect_number(c3, -1)

    def test_engines_agree(self, k4):
        numbers = [defect_number(k4, k, engine="subset") for k in range(7)]
        assert numbers == [4, 3, 2, 2, 0, 0, 1]
        assert numbers == [defect_number(k4, k, engine="flats") for k in range(7)]

    def test_unknown_engine(self, c3):
        with pytest.raises(GraphError, match="unknown engine"):
            defect_vector(c3, "magic")


class TestWitness:
    def test_single_edge_one_color(self, k2):
        coloring = witness_coloring(k2, 1)
        assert coloring.assignment == (1, 1)
        assert coloring.bad_edges == (0,)

    def test_odd_cycle_two_colors(self, c5):
        coloring = witness_coloring(c5, 1)
        assert coloring.colors == 2
        assert set(coloring.assignment) == {1, 2}
        assert coloring.bad_count == 1

    def test_infeasible_k(self, c3):
        assert witness_coloring(c3, 2) is None

    def test_bad_edges_form_a_flat(self):
        wheel = wheel_graph(5)
        for k in range(wheel.m + 1):
            coloring = witness_coloring(wheel, k)
            if coloring is not None:
                assert is_closed(wheel, coloring.bad_edges)


class TestFlats:
    def test_triangle_has_no_two_edge_flat(self, c3):
        assert flats_of_size(c3, 2) == []

    def test_counts(self, c4, k4):
        assert len(flats_of_size(c4, 1)) == 4
        triangles = flats_of_size(k4, 3)
        assert len(triangles) == 4
        assert all(flat.partition.count == 2 for flat in triangles)
        assert len(flats_of_size(k4, 2)) == 3

    def test_partition_enumeration_matches_scan(self, k4):
        by_partition = all_flats(k4)
        by_scan = [flat for k in range(k4.m + 1) for flat in flats_of_size(k4, k)]
        assert {f.edges for f in by_partition} == {f.edges for f in by_scan}
        assert [f.size for f in by_partition] == sorted(f.size for f in by_partition)

    def test_k_out_of_range(self, c3):
        with pytest.raises(GraphError, match="k out of range"):
            flats_of_size(c3, 4)

    def test_bell_numbers(self):
        assert [bell_number(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]

    def test_sparse_graph_scans_edge_subsets(self, mocker):
        sparse = new_graph(10, SPARSE_TEN)
        partitions = mocker.spy(flats_module, "_partition_flats")
        flats = all_flats(sparse)
        partitions.assert_not_called()
        assert flats[0].size == 0 and flats[-1].size == sparse.m
        assert all(is_closed(sparse, flat.edges) for flat in flats)

    def test_dense_graph_uses_partitions(self, mocker):
        subsets = mocker.spy(flats_module, "_subset_flats")
        all_flats(complete_graph(5))
        subsets.assert_not_called()

    @pytest.mark.parametrize(
        "edges",
        [[(0, 1), (1, 2), (2, 0), (2, 3)], [(0, 1), (1, 2), (2, 3), (3, 4), (0, 3)]],
    )
    def test_both_enumerators_agree(self, edges):
        graph = new_graph(max(max(pair) for pair in edges) + 1, edges)
        by_partition = flats_module._partition_flats(graph)
        by_subsets = flats_module._subset_flats(graph)
        assert [f.edges for f in by_partition] == [f.edges for f in by_subsets]

    def test_feasible_sets(self, c5, k4):
        assert feasible_k(c5) == {0, 1, 2, 3, 5}
        assert feasible_k(k4) == {0, 1, 2, 3, 6}
        assert feasible_k(star_graph(5)) == set(range(5))

    def test_flat_sum_matches_dc(self):
        wheel = wheel_graph(5)
        dc = defect_vector_dc(wheel)
        assert [defect_poly_flats(wheel, k) for k in range(wheel.m + 1)] == list(dc)

    def test_minimum_over_minors(self, c5):
        assert [defect_number_by_flats(c5, k) for k in range(7)] == [3, 2, 3, 2, 0, 1, 0]


class TestDefectTable:
    def test_single_edge(self, k2):
        table = defect_table(k2)
        assert table.numbers() == [2, 1]
        assert table.verified
        assert table.engines == ("dc", "subset", "flats", "oracle")

    def test_four_cycle(self, c4):
        table = defect_table(c4)
        assert table.numbers() == [2, 3, 2, 0, 1]
        assert table.feasible_set() == {0, 1, 2, 4}
        assert table.total() == LAM**4

    def test_wheel(self):
        table = defect_table(wheel_graph(5))
        assert table.numbers() == [3, 3, 2, 2, 2, 2, 0, 0, 1]

    def test_single_engine_is_unverified(self, c4):
        table = defect_table(c4, ["subset"])
        assert table.engines == ("subset",) and not table.verified
        assert table.same_values(defect_table(c4))

    def test_guarded_engine_is_skipped(self):
        get_config().engine.max_subset_edges = 2
        table = defect_table(path_graph(4))
        assert table.engines == ("dc", "flats", "oracle")
        assert table.numbers() == [2, 2, 2, 1]

    def test_disagreement_raises(self, c4, mocker):
        wrong = tuple(Poly.constant(1) for _ in range(c4.m + 1))
        mocker.patch("engine.table.defect_vector_subset", return_value=wrong)
        with pytest.raises(EngineDisagreementError) as excinfo:
            defect_table(c4, ["dc", "subset"])
        assert excinfo.value.second == "subset"
        assert excinfo.value.k == 0


class TestCache:
    def test_repeat_run_hits(self):
        cache = RecursionCache(True)
        wheel = wheel_graph(6)
        defect_vector_dc(wheel, cache)
        hits = cache.hits
        defect_vector_dc(wheel, cache)
        assert cache.hits > hits
        assert len(cache) > 0

    def test_disabled_cache_stays_empty(self):
        cache = RecursionCache(False)
        assert defect_vector_dc(cycle_graph(6), cache) == defect_vector_dc(cycle_graph(6))
        assert cache.stats() == {"hits": 0, "misses": 0, "entries": 0}

    def test_default_follows_config(self, monkeypatch):
        monkeypatch.setenv("KDEFECT_CACHE", "false")
        reset_config()
        assert RecursionCache().enabled is False

    def test_conflicting_insert(self):
        cache = RecursionCache(True)
        cache.put("bivariate", b"key", (LAM,))
        cache.put("bivariate", b"key", (LAM,))
        with pytest.raises(EngineDisagreementError):
            cache.put("bivariate", b"key", (LAM**2,))
