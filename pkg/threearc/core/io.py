"""
Edge-list reading and writing for threearc

Format: a header line "n m", then m lines "u v" with 0-based vertex
indices. Blank lines and lines starting with '#' are ignored.
"""

import logging
from typing import List, Tuple

from threearc.core.errors import GraphFormatError
from threearc.core.graph import SimpleGraph


def _data_lines(text: str) -> List[Tuple[int, str]]:
    """Non-comment lines with their 1-based line numbers"""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((number, line))
    return lines


def _parse_int_pair(line: str, number: int) -> Tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"expected two integers, got {line!r}", number)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"expected two integers, got {line!r}", number) from None


def parse_edge_list(text: str) -> SimpleGraph:
    """
    Parse an edge list into a SimpleGraph.

    Args:
        text: Edge-list text

    Returns:
        The graph with exactly the listed edges

    Raises:
        GraphFormatError: Malformed line, out-of-range index, loop,
            duplicate edge or wrong edge count, with the line number
    """
    lines = _data_lines(text)
    if not lines:
        raise GraphFormatError("missing header line 'n m'")

    header_number, header = lines[0]
    n, m = _parse_int_pair(header, header_number)
    if n < 0 or m < 0:
        raise GraphFormatError("vertex and edge counts must be nonnegative", header_number)

    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else None
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}", where)

    seen = set()
    edges = []
    for number, line in body:
        u, v = _parse_int_pair(line, number)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range 0..{n - 1}: {line!r}", number)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", number)
        seen.add(key)
        edges.append(key)

    logging.debug(f"Parsed graph with {n} vertices and {m} edges")
    return SimpleGraph.from_edges(n, edges)


def serialize_edge_list(graph: SimpleGraph) -> str:
    """Write a graph in edge-list format, edges sorted lexicographically"""
    lines = [f"{graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def read_text_file(path: str) -> str:
    """
    Read a UTF-8 input file.

    Raises:
        OSError: If the file cannot be read
        GraphFormatError: If it is not valid UTF-8, with the offending line
    """
    with open(path, "rb") as f:
        data = f.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data[:e.start].count(b"\n") + 1
        raise GraphFormatError(f"{path} is not valid UTF-8 (byte {data[e.start]:#04x})", line) from None


def read_graph_file(path: str) -> SimpleGraph:
    """
    Read an edge-list file.

    Raises:
        OSError: If the file cannot be read
        GraphFormatError: If its contents are malformed
    """
    text = read_text_file(path)
    logging.debug(f"Reading graph from {path}")
    return parse_edge_list(text)
