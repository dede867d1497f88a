"""Immutable simple undirected graphs on dense integer vertex ids.

Adjacency is stored as one bitmask per vertex, which keeps the neighborhood
intersections, subset tests, and copy-free relabelings used by the rest of
the package cheap for graphs of the sizes handled here (tens of vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InvalidPartsError, InvalidVertexError, SelfLoopError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitmask of vertex ``v``. Instances are
    immutable and hashable; equality is labeled equality. Use
    ``canon.canonical_form`` to compare isomorphism classes.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidVertexError(f"neighbor of {v} outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise SelfLoopError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
                r ^= low

    @cached_property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted pairs, in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for off in bits(row):
                out.append((u, u + 1 + off))
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum."""
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            frontier = 1 << s
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
            seen |= comp
            comps.append(list(bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.edge_count == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n >= 1 and self.is_connected() and self.edge_count == self.n - 1

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabeling is not a permutation of 0..n-1")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            img = 0
            for u in bits(row):
                img |= 1 << perm[u]
            adj[perm[v]] = img
        return Graph(self.n, tuple(adj))

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} outside 0..{self.n - 1}")

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse silently."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertexError(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices: center 0, leaves 1..n-1."""
    if n < 1:
        raise ValueError("star needs at least one vertex")
    return build_graph(n, [(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def matching_graph(n: int) -> Graph:
    """Matching on ``n`` vertices: edges (0,1),(2,3),...; odd leftover isolated."""
    return build_graph(n, [(i, i + 1) for i in range(0, n - 1, 2)])


def double_broom(length: int, s: int, t: int) -> Graph:
    """Path on ``length`` vertices with ``s`` pendant edges at one end and ``t`` at the other.

    Vertices: path 0..length-1, then the s pendants at vertex 0, then the t
    pendants at vertex length-1. The classical double brooms have
    length, s, t all at least 2, but any s, t >= 0 builds a valid tree.
    """
    if length < 2:
        raise ValueError("double broom needs a path on at least two vertices")
    if s < 0 or t < 0:
        raise ValueError("pendant counts must be non-negative")
    edges = [(i, i + 1) for i in range(length - 1)]
    edges += [(0, length + i) for i in range(s)]
    edges += [(length - 1, length + s + i) for i in range(t)]
    return build_graph(length + s + t, edges)


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    """Complete multipartite graph; parts occupy contiguous id blocks in order."""
    sizes = list(sizes)
    if not sizes or any(s < 0 for s in sizes):
        raise InvalidPartsError("part sizes must be a non-empty list of non-negative ints")
    n = sum(sizes)
    full = (1 << n) - 1
    adj = []
    start = 0
    for s in sizes:
        part_mask = ((1 << s) - 1) << start
        row = full ^ part_mask
        adj.extend([row] * s)
        start += s
    return Graph(n, tuple(adj))


def turan_graph(n: int, p: int) -> Graph:
    """Turan graph T(n,p): balanced complete p-partite graph on n vertices.

    Part sizes differ by at most one; the larger parts come first and parts
    occupy contiguous id blocks, so vertex 0 always sits in a largest part.
    """
    if p < 1:
        raise InvalidPartsError("part count must be at least 1")
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    base, extra = divmod(n, p)
    sizes = [base + 1] * extra + [base] * (p - extra)
    return complete_multipartite(sizes)


def turan_part_sizes(n: int, p: int) -> list[int]:
    """Part sizes of T(n,p) in construction order (larger parts first)."""
    if p < 1:
        raise InvalidPartsError("part count must be at least 1")
    base, extra = divmod(n, p)
    return [base + 1] * extra + [base] * (p - extra)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; the second operand is shifted past the first."""
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def join(g: Graph, h: Graph) -> Graph:
    """Join: disjoint union plus every edge between the two operands."""
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    adj = [row | h_mask for row in g.adj]
    adj += [(row << g.n) | g_mask for row in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the given vertices, relabeled to 0..k-1 in sorted order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise InvalidVertexError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for v in vs:
        for u in bits(g.adj[v]):
            if u in index:
                adj[index[v]] |= 1 << index[u]
    return Graph(len(vs), tuple(adj))
