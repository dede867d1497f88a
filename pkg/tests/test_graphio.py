"""graph6, edge-list, and DOT serialization tests.

networkx serves as the independent reference implementation for the
graph6 wire format.
"""

import random

import networkx as nx
import pytest

from oracles import enumerate_trees, random_tree
from turanlab import (
    build_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from turanlab.errors import ParseError
from turanlab.graphio import (
    decode_edge_list,
    decode_graph6,
    encode_edge_list,
    encode_graph6,
    read_graph6_lines,
    to_dot,
)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h):
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


def test_known_codes():
    assert encode_graph6(empty_graph(1)) == b"@"
    assert encode_graph6(complete_graph(3)) == b"Bw"
    assert encode_graph6(complete_graph(4)) == b"C~"
    assert encode_graph6(empty_graph(0)) == b"?"
    assert decode_graph6(b"Bw") == complete_graph(3)


@pytest.mark.parametrize("g", [
    empty_graph(0),
    empty_graph(5),
    path_graph(2),
    path_graph(10),
    star_graph(7),
    cycle_graph(9),
    complete_graph(8),
])
def test_round_trip_small(g):
    assert decode_graph6(encode_graph6(g)) == g


def test_matches_networkx_on_all_small_trees():
    for n in range(1, 9):
        for t in enumerate_trees(n):
            ours = encode_graph6(t)
            theirs = nx.to_graph6_bytes(to_nx(t), header=False).strip()
            assert ours == theirs


def test_matches_networkx_on_random_graphs():
    rng = random.Random(20260817)
    for _ in range(120):
        n = rng.randrange(0, 20)
        h = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(1 << 30))
        g = from_nx(h) if n else empty_graph(0)
        assert encode_graph6(g) == nx.to_graph6_bytes(h, header=False).strip()
        assert decode_graph6(nx.to_graph6_bytes(h, header=False).strip()) == g


def test_long_form_threshold():
    # 62 vertices is the last short-form order, 63 the first long-form one
    for n in (62, 63, 70):
        g = path_graph(n)
        code = encode_graph6(g)
        if n >= 63:
            assert code[0:1] == b"~"
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).strip()
        assert code == theirs
        assert decode_graph6(code) == g


def test_decode_accepts_optional_header():
    assert decode_graph6(b">>graph6<<Bw") == complete_graph(3)


@pytest.mark.parametrize("blob", [
    b"",
    b"B",          # truncated body
    b"Bww",        # trailing bytes
    b"B" + bytes([30]),   # byte below the graph6 range
    b"B" + bytes([127]),  # byte above the graph6 range
    b"Bx",         # nonzero padding bits for n=3
    b"~~",         # long form with missing order bytes
])
def test_decode_rejects_malformed(blob):
    with pytest.raises(ParseError):
        decode_graph6(blob)


def test_read_graph6_lines():
    text = b">>graph6<<Bw\n@\n\nC~\n"
    graphs = read_graph6_lines(text)
    assert graphs == [complete_graph(3), empty_graph(1), complete_graph(4)]


def test_edge_list_round_trip():
    rng = random.Random(7)
    for _ in range(40):
        t = random_tree(rng.randrange(1, 15), rng)
        assert decode_edge_list(encode_edge_list(t)) == t


def test_edge_list_format():
    g = build_graph(3, [(0, 2)])
    assert encode_edge_list(g) == "3 1\n0 2\n"


@pytest.mark.parametrize("text", [
    "",
    "3\n",            # missing edge count
    "3 2\n0 1\n",     # fewer edges than declared
    "3 1\n0 1\n1 2\n",  # more edges than declared
    "3 1\n0 3\n",     # vertex out of range
    "3 1\n0 0\n",     # self-loop
    "a 1\n0 1\n",     # non-numeric header
    "3 1\n0\n",       # malformed edge line
])
def test_edge_list_rejects_malformed(text):
    with pytest.raises(ParseError):
        decode_edge_list(text)


def test_to_dot_mentions_every_edge():
    g = path_graph(3)
    dot = to_dot(g, name="p3")
    assert "p3" in dot
    assert "0 -- 1" in dot
    assert "1 -- 2" in dot
