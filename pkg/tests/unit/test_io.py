import pytest

from core.exceptions import GraphFormatError
from families import cycle_graph, wheel_graph
from graphs import load_graph, parse_edge_list, parse_graph6, to_edge_list, to_graph6
from graphs.canonical import canonical_key

TRIANGLE = """\
# triangle
n 3

e 0 1
e 1 2
e 2 0
"""


class TestEdgeList:
    def test_parse_triangle(self):
        graph = parse_edge_list(TRIANGLE)
        assert graph.n == 3
        assert graph.pairs() == [(0, 1), (1, 2), (2, 0)]

    def test_loops_and_parallels_kept(self):
        graph = parse_edge_list("n 2\ne 0 1\ne 1 0\ne 1 1\n")
        assert graph.m == 3 and graph.loop_count() == 1

    def test_serializer_round_trips(self):
        graph = wheel_graph(6)
        assert parse_edge_list(to_edge_list(graph)) == graph

    def test_isolated_vertices(self):
        graph = parse_edge_list("n 4\n")
        assert graph.n == 4 and graph.m == 0

    @pytest.mark.parametrize(
        "text, line",
        [
            ("n 3\ne 0 3\n", 2),
            ("n 3\ne 0 1\nx 1 2\n", 3),
            ("e 0 1\n", 1),
            ("n 3\nn 4\n", 2),
            ("n three\n", 1),
            ("n 3\n\n# c\ne 0\n", 4),
            ("n 3\ne a b\n", 2),
        ],
    )
    def test_errors_carry_line_number(self, text, line):
        with pytest.raises(GraphFormatError) as excinfo:
            parse_edge_list(text)
        assert excinfo.value.line == line
        assert str(excinfo.value).startswith(f"line {line}:")

    def test_missing_n_line(self):
        with pytest.raises(GraphFormatError, match="missing 'n' line"):
            parse_edge_list("# nothing\n")

    def test_strict_rejects_loop(self):
        with pytest.raises(GraphFormatError, match="loop") as excinfo:
            parse_edge_list("n 2\ne 0 1\ne 1 1\n", strict=True)
        assert excinfo.value.line == 3

    def test_strict_rejects_parallel_in_either_direction(self):
        with pytest.raises(GraphFormatError, match="duplicate edge"):
            parse_edge_list("n 2\ne 0 1\ne 1 0\n", strict=True)


class TestGraph6:
    def test_round_trip_is_isomorphic(self):
        graph = cycle_graph(7)
        back = parse_graph6(to_graph6(graph))
        assert back.n == 7 and back.m == 7
        assert canonical_key(back) == canonical_key(graph)

    def test_known_string(self):
        # "Bw" is the triangle
        graph = parse_graph6("Bw")
        assert graph.n == 3 and graph.pairs() == [(0, 1), (0, 2), (1, 2)]

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<Bw").m == 3

    def test_multigraph_rejected(self):
        with pytest.raises(GraphFormatError, match="simple graphs only"):
            to_graph6(parse_edge_list("n 2\ne 0 1\ne 0 1\n"))

    @pytest.mark.parametrize(
        "text, message",
        [
            ("", "empty"),
            ("~~~~", "truncated size header"),
            ("B!", "outside 63..126"),
            ("B", "need 1 data bytes, found 0"),
            ("Bww", "need 1 data bytes, found 2"),
        ],
    )
    def test_malformed_input_rejected(self, text, message):
        with pytest.raises(GraphFormatError, match=message) as excinfo:
            parse_graph6(text)
        assert excinfo.value.line == 1

    def test_empty_and_single_vertex(self):
        assert parse_graph6("?").n == 0
        assert parse_graph6("@").n == 1


class TestLoadGraph:
    def test_edge_list_file(self, tmp_path):
        path = tmp_path / "c3.txt"
        path.write_text(TRIANGLE)
        assert load_graph(str(path)).m == 3

    def test_graph6_file(self, tmp_path):
        path = tmp_path / "k3.g6"
        path.write_text("Bw\n")
        assert load_graph(str(path)).m == 3

    def test_bad_graph6_file_names_line(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("\n~~~~\n")
        with pytest.raises(GraphFormatError, match="truncated") as excinfo:
            load_graph(str(path))
        assert excinfo.value.line == 2

    def test_strict_flag_passes_through(self, tmp_path):
        path = tmp_path / "loop.txt"
        path.write_text("n 1\ne 0 0\n")
        assert load_graph(str(path)).m == 1
        with pytest.raises(GraphFormatError):
            load_graph(str(path), strict=True)

    def test_missing_file(self, tmp_path):
        with pytest.raises(GraphFormatError, match="not found"):
            load_graph(str(tmp_path / "absent.txt"))
