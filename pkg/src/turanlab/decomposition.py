"""Vertex splitting and the decomposition family of a tree.

Splitting a vertex v replaces it by deg(v) independent copies, one per
incident edge. Splitting a set U is simultaneous and edge-wise: every edge
xy keeps exactly one copy, joining the representative of x dedicated to xy
with the representative of y dedicated to xy. Splitting therefore preserves
the edge count and maps forests to forests.

The decomposition family of a tree T collects the results of splitting
every vertex subset, up to isomorphism. Its minimum independent covering
number q drives the extremal formula, and the forbidden family derived from
it is what the apex set of an extremal construction must avoid.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .canon import canonical_form
from .errors import NotForestError, NotTreeError, TooLargeError
from .graphs import Graph, bits, build_graph, complete_graph, induced_subgraph
from .search import is_family_free, subgraph_contains
from .trees import (
    bipartition,
    covering_number,
    independence_number,
    independent_covering_number,
)

DECOMPOSITION_LIMIT = 14


def vertex_split(t: Graph, split_set: frozenset[int] | set[int]) -> Graph:
    """Split every vertex of ``split_set`` simultaneously.

    Result labeling is deterministic: unsplit vertices first in increasing
    original order, then for each split vertex in increasing order one copy
    per incident edge, ordered by the neighbor's original id. A split
    isolated vertex has no incident edges and simply disappears.
    """
    if not t.is_forest():
        raise NotForestError("vertex splitting is defined on forests")
    split = frozenset(split_set)
    for v in split:
        if not 0 <= v < t.n:
            raise NotForestError(f"split vertex {v} outside 0..{t.n - 1}")
    new_id: dict[int | tuple[int, int], int] = {}
    counter = 0
    for v in range(t.n):
        if v not in split:
            new_id[v] = counter
            counter += 1
    for v in range(t.n):
        if v in split:
            for w in bits(t.adj[v]):
                new_id[(v, w)] = counter
                counter += 1
    edges = []
    for x, y in t.edges():
        xe = new_id[(x, y)] if x in split else new_id[x]
        ye = new_id[(y, x)] if y in split else new_id[y]
        edges.append((xe, ye))
    return build_graph(counter, edges)


@dataclass(frozen=True)
class FamilyMember:
    """One isomorphism class of split results, with a witnessing split set."""

    graph: Graph
    split_set: frozenset[int]
    q: int
    beta: int


@dataclass(frozen=True)
class DecompositionFamily:
    members: tuple[FamilyMember, ...]
    q_min: int
    t_edges: int


class FamilyMode(Enum):
    COVER_DERIVED = "cover_derived"
    CLIQUE = "clique"


@dataclass(frozen=True)
class ForbiddenFamily:
    members: tuple[Graph, ...]
    mode: FamilyMode
    in_theorem_scope: bool


def decomposition_family(t: Graph, workers: int = 1) -> DecompositionFamily:
    """All split results of a tree up to isomorphism.

    Enumerates every one of the 2^n vertex subsets, so the input is capped
    at DECOMPOSITION_LIMIT vertices (and the largest inputs take minutes).
    """
    if not (t.n >= 2 and t.is_tree()):
        raise NotTreeError("decomposition family needs a tree on at least 2 vertices")
    if t.n > DECOMPOSITION_LIMIT:
        raise TooLargeError(
            f"decomposition family is capped at {DECOMPOSITION_LIMIT} vertices"
        )
    found: dict[bytes, tuple[Graph, frozenset[int]]] = {}
    if workers > 1:
        for key, graph, mask in _split_all_parallel(t, workers):
            if key not in found:
                found[key] = (graph, _mask_to_set(mask))
    else:
        for mask in range(1 << t.n):
            split = _mask_to_set(mask)
            result = vertex_split(t, split)
            key = canonical_form(result).key
            if key not in found:
                found[key] = (result, split)
    members = []
    for key in sorted(found):
        graph, split = found[key]
        members.append(FamilyMember(
            graph=graph,
            split_set=split,
            q=independent_covering_number(graph),
            beta=covering_number(graph),
        ))
    q_min = min(m.q for m in members)
    return DecompositionFamily(tuple(members), q_min, t.edge_count)


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def _split_chunk(args: tuple[int, tuple[tuple[int, int], ...], int, int, int]):
    n, edges, start, stop, step = args
    t = build_graph(n, edges)
    out = []
    for mask in range(start, stop, step):
        result = vertex_split(t, _mask_to_set(mask))
        out.append((canonical_form(result).key, result, mask))
    return out

def _split_all_parallel(t: Graph, workers: int):
    total = 1 << t.n
    edges = tuple(t.edges())
    chunk = max(1, total // (workers * 8))
    jobs = [(t.n, edges, lo, min(lo + chunk, total), 1)
            for lo in range(0, total, chunk)]
    results: list[tuple[bytes, Graph, int]] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_split_chunk, jobs):
            results.extend(part)
    # merge in mask order so the witnessing split sets match the serial run
    results.sort(key=lambda item: item[2])
    return results


def forbidden_family(t: Graph, family: DecompositionFamily | None = None) -> ForbiddenFamily:
    """Forbidden graphs for the apex set of the extremal construction.

    With q the family minimum independent covering number: if some member
    admits a vertex cover of size at most q-1, collect the subgraphs induced
    on all such covers over all such members and keep the subgraph-minimal
    ones; otherwise the single forbidden graph is K_q.

    The family is meaningful for the formulas only when the tree has a
    degree-1 vertex in its smaller color class and independence number
    exceeding the larger class; ``in_theorem_scope`` records that check.
    """
    if family is None:
        family = decomposition_family(t)
    q = family.q_min
    bip = bipartition(t)
    delta_a = min(t.degree(v) for v in bip.class_a)
    alpha = independence_number(t)
    in_scope = delta_a == 1 and alpha > len(bip.class_b)

    cover_limit = q - 1
    collected: dict[bytes, Graph] = {}
    for member in family.members:
        if member.beta > cover_limit:
            continue
        g = member.graph
        for cover in _covers_up_to(g, cover_limit):
            sub = induced_subgraph(g, cover)
            key = canonical_form(sub).key
            collected.setdefault(key, sub)
    if not collected:
        return ForbiddenFamily((complete_graph(q),), FamilyMode.CLIQUE, in_scope)
    graphs = [collected[key] for key in sorted(collected)]
    minimal = []
    for g in graphs:
        redundant = False
        for other in graphs:
            if other is g:
                continue
            # distinct classes with equal (n, m) cannot contain each other
            if (other.n, other.edge_count) == (g.n, g.edge_count):
                continue
            if subgraph_contains(g, other):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    return ForbiddenFamily(tuple(minimal), FamilyMode.COVER_DERIVED, in_scope)


def _covers_up_to(g: Graph, limit: int):
    """All vertex covers of size at most ``limit`` (not only minimal ones)."""
    if limit < 0:
        return
    edges = g.edges()
    n = g.n
    from itertools import combinations
    for size in range(limit + 1):
        for combo in combinations(range(n), size):
            chosen = 0
            for v in combo:
                chosen |= 1 << v
            if all((chosen >> u) & 1 or (chosen >> v) & 1 for u, v in edges):
                yield combo


def contains_family_member(g: Graph, family: ForbiddenFamily | DecompositionFamily,
                           budget: int | None = None) -> bool:
    """Does ``g`` contain any member of the family as a subgraph?"""
    if isinstance(family, DecompositionFamily):
        members = [m.graph for m in family.members]
    else:
        members = list(family.members)
    kwargs = {} if budget is None else {"budget": budget}
    return not is_family_free(g, members, **kwargs)
