"""Serialization: graph6, plain edge lists, and DOT emission.

The graph6 codec implements the published format bit-exactly: the short
one-byte header for n <= 62 and the four-byte '~' header up to n = 258047,
followed by the upper triangle of the adjacency matrix in column order,
packed big-endian into 6-bit groups offset by 63. Padding bits must be zero.
"""

from __future__ import annotations

from .errors import ParseError, TooLargeError
from .graphs import Graph, build_graph

_G6_MAX_N = 258047
_HEADER = b">>graph6<<"


def encode_graph6(g: Graph) -> bytes:
    """Encode a graph as one graph6 record (no trailing newline)."""
    n = g.n
    if n > _G6_MAX_N:
        raise TooLargeError(f"graph6 supports at most {_G6_MAX_N} vertices")
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    out = bytearray(head)
    group = 0
    nbits = 0
    for col in range(1, n):
        col_row = g.adj[col]
        for rowv in range(col):
            group = (group << 1) | ((col_row >> rowv) & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record; strict about length, byte range, and padding."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\r\n")
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if not data:
        raise ParseError("empty graph6 record")
    for byte in data:
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte} outside graph6 range 63..126")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ParseError("graph6 records beyond 258047 vertices are not supported")
        if len(data) < 4:
            raise ParseError("truncated graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {expected}")
    stream = 0
    for byte in body:
        stream = (stream << 6) | (byte - 63)
    total = expected * 6
    if nbits < total and stream & ((1 << (total - nbits)) - 1):
        raise ParseError("non-zero padding bits in graph6 record")
    edges = []
    pos = 0
    for col in range(1, n):
        for rowv in range(col):
            if (stream >> (total - 1 - pos)) & 1:
                edges.append((rowv, col))
            pos += 1
    return build_graph(n, edges)


def read_graph6_lines(text: str) -> list[Graph]:
    """Decode every non-empty line of a graph6 file, tolerating the format header."""
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line == _HEADER.decode("ascii"):
            continue
        graphs.append(decode_graph6(line))
    return graphs


def encode_edge_list(g: Graph) -> str:
    """Plain text format: first line ``n m``, then one ``u v`` line per edge."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def decode_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("first line must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError("first line must be two integers") from exc
    if n < 0 or m < 0:
        raise ParseError("negative counts in edge list header")
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"malformed edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"malformed edge line: {ln!r}") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise ParseError(f"self-loop at vertex {u}")
        edges.append((u, v))
    return build_graph(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    """Emit an undirected DOT document listing every vertex and edge."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
