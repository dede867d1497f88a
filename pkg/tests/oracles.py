"""Brute-force oracles, independent of the library implementations.

Everything here is written the most naive correct way available: all
permutations, all injections, all subsets, direct recursion. The only
turanlab import is the Graph container itself, so a bug in the library
cannot hide inside its own oracle. Known counting sequences (trees,
forests, graphs per vertex count) give the oracles an external anchor.
"""

from __future__ import annotations

import heapq
import itertools
import random

from turanlab.graphs import Graph, build_graph

# published counts used to validate the enumerators themselves
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}
FOREST_COUNTS = {1: 1, 2: 2, 3: 3, 4: 6, 5: 10, 6: 20, 7: 37, 8: 76}
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def mincode(g: Graph) -> tuple[int, ...]:
    """Lexicographically minimal upper-triangle adjacency vector.

    All n! relabelings are tried, so this is the ground-truth canonical
    form for n up to about 7. The vertex count is prepended so codes of
    different orders never collide.
    """
    best = None
    idx = list(range(g.n))
    for perm in itertools.permutations(idx):
        code = tuple(
            (g.adj[perm[i]] >> perm[j]) & 1
            for i in range(g.n)
            for j in range(i + 1, g.n)
        )
        if best is None or code < best:
            best = code
    return (g.n,) + (best or ())


def brute_contains(host: Graph, pattern: Graph) -> bool:
    """Non-induced subgraph test by trying every injection."""
    if pattern.n > host.n:
        return False
    pe = pattern.edges()
    for image in itertools.permutations(range(host.n), pattern.n):
        if all((host.adj[image[u]] >> image[v]) & 1 for u, v in pe):
            return True
    return False


def brute_independence(g: Graph) -> int:
    """Maximum independent set size by scanning all 2^n subsets."""
    best = 0
    for mask in range(1 << g.n):
        if mask.bit_count() <= best:
            continue
        if all(g.adj[v] & mask == 0 for v in range(g.n) if (mask >> v) & 1):
            best = mask.bit_count()
    return best


def brute_cover(g: Graph) -> int:
    return g.n - brute_independence(g)


def brute_matching(g: Graph) -> int:
    """Maximum matching size by take/skip recursion on the edge list."""

    def best(edges: list[tuple[int, int]]) -> int:
        if not edges:
            return 0
        (u, v), rest = edges[0], edges[1:]
        skip = best(rest)
        take = 1 + best([(a, b) for a, b in rest if u not in (a, b) and v not in (a, b)])
        return max(skip, take)

    return best(g.edges())


def brute_independent_cover_min(g: Graph) -> int | None:
    """Smallest independent set meeting every edge, or None if none exists."""
    edges = g.edges()
    best = None
    for mask in range(1 << g.n):
        if best is not None and mask.bit_count() >= best:
            continue
        members = [v for v in range(g.n) if (mask >> v) & 1]
        if any(g.adj[v] & mask for v in members):
            continue
        if all((mask >> u) & 1 or (mask >> v) & 1 for u, v in edges):
            best = len(members)
    return best


def forest_certificate(g: Graph) -> tuple[str, ...]:
    """Isomorphism certificate for forests: sorted centre-rooted codes."""
    reps = []
    for comp in g.components():
        reps.append(min(_rooted_code(g, c, -1) for c in _centers(g, comp)))
    return tuple(sorted(reps))


def _centers(g: Graph, comp: list[int]) -> list[int]:
    alive = set(comp)
    degree = {v: g.adj[v].bit_count() for v in comp}
    while len(alive) > 2:
        leaves = [v for v in alive if degree[v] <= 1]
        alive.difference_update(leaves)
        for v in leaves:
            for u in g.neighbors(v):
                if u in alive:
                    degree[u] -= 1
    return sorted(alive)


def _rooted_code(g: Graph, v: int, parent: int) -> str:
    subs = sorted(_rooted_code(g, u, v) for u in g.neighbors(v) if u != parent)
    return "(" + "".join(subs) + ")"


_TREES: dict[int, list[Graph]] = {}
_FORESTS: dict[int, list[Graph]] = {}


def enumerate_trees(n: int) -> list[Graph]:
    """All trees on n vertices up to isomorphism, by leaf extension."""
    if n < 1:
        raise ValueError("n must be positive")
    if n not in _TREES:
        if n == 1:
            _TREES[n] = [build_graph(1, [])]
        else:
            seen: set[tuple[str, ...]] = set()
            out = []
            for t in enumerate_trees(n - 1):
                base = t.edges()
                for v in range(t.n):
                    g = build_graph(n, base + [(v, n - 1)])
                    cert = forest_certificate(g)
                    if cert not in seen:
                        seen.add(cert)
                        out.append(g)
            _TREES[n] = out
    return _TREES[n]


def enumerate_forests(n: int) -> list[Graph]:
    """All forests on n vertices up to isomorphism.

    Every forest on n >= 2 vertices arises from one on n-1 by adding either
    an isolated vertex or a pendant edge, since every nontrivial tree
    component has a leaf.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n not in _FORESTS:
        if n == 1:
            _FORESTS[n] = [build_graph(1, [])]
        else:
            seen: set[tuple[str, ...]] = set()
            out = []
            for f in enumerate_forests(n - 1):
                base = f.edges()
                grown = [build_graph(n, base)]
                grown += [build_graph(n, base + [(v, n - 1)]) for v in range(f.n)]
                for g in grown:
                    cert = forest_certificate(g)
                    if cert not in seen:
                        seen.add(cert)
                        out.append(g)
            _FORESTS[n] = out
    return _FORESTS[n]


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree via Prufer sequence decoding."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return build_graph(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build_graph(n, edges)


def all_graphs(n: int):
    """Yield every labeled graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def brute_ex_value(n: int, family: list[Graph]) -> int:
    """Naive ex(n, family) by scanning every labeled graph."""
    best = 0
    for g in all_graphs(n):
        if g.edge_count <= best:
            continue
        if not any(brute_contains(g, f) for f in family):
            best = g.edge_count
    return best
