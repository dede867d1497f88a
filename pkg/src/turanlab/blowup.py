"""Edge blow-ups: replace every edge by a clique on p+1 vertices.

The blow-up of H with parameter p keeps V(H), and for each edge uv adds p-1
fresh vertices completing {u, v} to a K_{p+1}. Fresh vertices of distinct
edges are distinct, so the added cliques pairwise intersect only inside
V(H). Sizes: n' = n + e(H)(p-1) and m' = e(H) p (p+1) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidBlowupError
from .graphs import Graph

Origin = tuple[str, int | tuple[int, int]]


@dataclass(frozen=True)
class BlowupResult:
    """Blow-up graph plus provenance of every vertex.

    ``origin[w]`` is ("vertex", v) for an original vertex and
    ("edge", (u, v)) for a fresh vertex of the clique built on edge uv.
    """

    graph: Graph
    origin: tuple[Origin, ...]

    def fresh_vertices(self, edge: tuple[int, int]) -> list[int]:
        u, v = min(edge), max(edge)
        return [w for w, o in enumerate(self.origin) if o == ("edge", (u, v))]


def edge_blowup(h: Graph, p: int) -> BlowupResult:
    """Blow up every edge of ``h`` to a K_{p+1}; fresh ids follow sorted edge order."""
    if p < 2:
        raise InvalidBlowupError("blow-up needs p >= 2")
    n = h.n
    adj = list(h.adj)
    origin: list[Origin] = [("vertex", v) for v in range(n)]
    next_id = n
    for u, v in h.edges():
        fresh = list(range(next_id, next_id + p - 1))
        next_id += p - 1
        clique = [u, v] + fresh
        adj.extend([0] * (p - 1))
        origin.extend([("edge", (u, v))] * (p - 1))
        for i, x in enumerate(clique):
            for y in clique[i + 1:]:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
    return BlowupResult(Graph(next_id, tuple(adj)), tuple(origin))
