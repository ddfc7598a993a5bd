"""Edge-list and graph6 input/output."""

from pathlib import Path
from typing import List, Tuple

import networkx as nx

from core.exceptions import GraphFormatError
from core.logger import get_logger

from .graph import Graph, new_graph

logger = get_logger(__name__)


def parse_edge_list(text: str, strict: bool = False) -> Graph:
    """
    Parse the edge-list format.

    Format: a line ``n <N>`` followed by lines ``e <u> <v>`` (0-based). Lines starting with
    ``#`` and blank lines are ignored. Repeated ``e`` lines give parallel edges and ``e u u``
    gives a loop, unless ``strict`` is set, in which case both are rejected.

    Raises:
        GraphFormatError: with the offending 1-based line number
    """
    n = None
    pairs: List[Tuple[int, int]] = []
    seen = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        tag = fields[0]

        if tag == "n":
            if n is not None:
                raise GraphFormatError("duplicate 'n' line", lineno)
            if len(fields) != 2:
                raise GraphFormatError("expected 'n <count>'", lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphFormatError(f"vertex count is not an integer: {fields[1]!r}", lineno)
            if n < 0:
                raise GraphFormatError("vertex count must be non-negative", lineno)
        elif tag == "e":
            if n is None:
                raise GraphFormatError("'e' line before 'n' line", lineno)
            if len(fields) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(f"endpoints are not integers: {line!r}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"endpoint out of range in pair ({u}, {v})", lineno)
            if strict:
                key = (min(u, v), max(u, v))
                if u == v:
                    raise GraphFormatError(f"loop at vertex {u} in strict mode", lineno)
                if key in seen:
                    raise GraphFormatError(f"duplicate edge ({u}, {v}) in strict mode", lineno)
                seen.add(key)
            pairs.append((u, v))
        else:
            raise GraphFormatError(f"unknown line tag {tag!r}", lineno)

    if n is None:
        raise GraphFormatError("missing 'n' line")
    return new_graph(n, pairs)


def to_edge_list(graph: Graph) -> str:
    """Serialize in the edge-list format (round-trips through parse_edge_list)."""
    lines = [f"n {graph.n}"]
    lines.extend(f"e {e.u} {e.v}" for e in graph.edges)
    return "\n".join(lines) + "\n"


def _check_graph6(data: bytes, line: int) -> None:
    """Validate the byte range, the size header and the payload length."""
    if not data:
        raise GraphFormatError("invalid graph6 input: empty string", line)
    bad = [b for b in data if not 63 <= b <= 126]
    if bad:
        raise GraphFormatError(
            f"invalid graph6 input: byte {chr(bad[0])!r} outside 63..126", line
        )

    if data[0] != 126:
        header = 1
    elif len(data) > 1 and data[1] != 126:
        header = 4
    else:
        header = 8
    if len(data) < header:
        raise GraphFormatError("invalid graph6 input: truncated size header", line)
    if header == 1:
        n = data[0] - 63
    else:
        n = 0
        for b in data[1:4] if header == 4 else data[2:8]:
            n = (n << 6) | (b - 63)

    expected = (n * (n - 1) // 2 + 5) // 6
    if len(data) - header != expected:
        raise GraphFormatError(
            f"invalid graph6 input: {n} vertices need {expected} data bytes, "
            f"found {len(data) - header}",
            line,
        )


def parse_graph6(text: str, line: int = 1) -> Graph:
    """
    Parse a graph6 string (simple graphs only) via networkx.

    Edges are numbered in sorted (u, v) order.

    Raises:
        GraphFormatError: on bad bytes, a truncated header or a wrong payload length
    """
    payload = text.strip()
    if payload.startswith(">>graph6<<"):
        payload = payload[len(">>graph6<<"):]
    try:
        data = payload.encode("ascii")
    except UnicodeEncodeError:
        raise GraphFormatError("invalid graph6 input: non-ASCII character", line)
    _check_graph6(data, line)
    try:
        nx_graph = nx.from_graph6_bytes(data)
    except (ValueError, IndexError, nx.NetworkXError) as e:
        raise GraphFormatError(f"invalid graph6 input: {e}", line)
    pairs = sorted((min(u, v), max(u, v)) for u, v in nx_graph.edges())
    return new_graph(nx_graph.number_of_nodes(), pairs)


def to_graph6(graph: Graph) -> str:
    """Serialize a simple graph as graph6 (no header)."""
    keys = [(min(e.u, e.v), max(e.u, e.v)) for e in graph.edges]
    if any(u == v for u, v in keys) or len(set(keys)) != len(keys):
        raise GraphFormatError("graph6 holds simple graphs only (no loops or parallel edges)")
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.n))
    nx_graph.add_edges_from(keys)
    return nx.to_graph6_bytes(nx_graph, header=False).decode("ascii").strip()


def load_graph(path: str, strict: bool = False) -> Graph:
    """
    Load a graph from a file; ``.g6`` files are graph6, everything else is edge-list.

    Raises:
        GraphFormatError: if the file is missing or malformed
    """
    file_path = Path(path)
    if not file_path.exists():
        raise GraphFormatError(f"input file not found: {path}")
    text = file_path.read_text()
    logger.debug("Loading graph", file=str(file_path), size=len(text))
    if file_path.suffix == ".g6":
        lines = [(no, line) for no, line in enumerate(text.splitlines(), start=1) if line.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected exactly one graph6 line, found {len(lines)}")
        lineno, line = lines[0]
        return parse_graph6(line, lineno)
    return parse_edge_list(text, strict=strict)
