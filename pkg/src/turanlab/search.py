"""Exhaustive search oracles: subgraph containment and exact ex(n, family).

``subgraph_contains`` decides non-induced subgraph containment by
backtracking over candidate images with bitmask domains and forward
checking: mapping a pattern vertex intersects the domains of its unmapped
pattern neighbors with the host neighborhood of the image, and any emptied
domain prunes the branch. The next pattern vertex is always one with the
smallest remaining domain (ties: larger pattern degree, then lower id), and
candidates are tried in ascending (host degree - pattern degree, id) order.
At the root, candidates are restricted to one representative per discovered
host automorphism orbit. Every attempted assignment consumes one unit of
the node budget; exhausting the budget raises BudgetExceededError, which is
deliberately distinct from a False verdict.

``brute_ex`` computes exact extremal numbers by leveled enumeration: all
family-free graphs on k+1 vertices arise by attaching a new vertex to a
family-free graph on k vertices (freeness is hereditary), so each level
extends the previous level's isomorphism-class representatives by every
neighborhood mask, filters by freeness, and deduplicates canonically.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .canon import GENERAL_LIMIT, automorphism_generators, automorphism_orbits, canonical_form
from .errors import BudgetExceededError, TooLargeError
from .graphs import Graph, bits

DEFAULT_NODE_BUDGET = 10**9
BRUTE_EX_LIMIT = 10


def subgraph_contains(host: Graph, pattern: Graph, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Does ``host`` contain ``pattern`` as a (not necessarily induced) subgraph?"""
    np_, nh = pattern.n, host.n
    if np_ == 0:
        return True
    if np_ > nh or pattern.edge_count > host.edge_count:
        return False
    pdeg = [pattern.adj[u].bit_count() for u in range(np_)]
    hdeg = [host.adj[v].bit_count() for v in range(nh)]
    for pd, hd in zip(sorted(pdeg, reverse=True), sorted(hdeg, reverse=True)):
        if pd > hd:
            return False

    hadj = host.adj
    padj = pattern.adj
    domains = []
    for u in range(np_):
        d = 0
        for v in range(nh):
            if hdeg[v] >= pdeg[u]:
                d |= 1 << v
        if not d:
            return False
        domains.append(d)

    if nh <= GENERAL_LIMIT:
        orbit_of = automorphism_orbits(host)
    else:
        orbit_of = list(range(nh))

    assigned = [-1] * np_
    nodes_left = budget

    def select(dom: list[int]) -> int:
        best_u = -1
        best_rank = None
        for u in range(np_):
            if assigned[u] >= 0:
                continue
            rank = (dom[u].bit_count(), -pdeg[u], u)
            if best_rank is None or rank < best_rank:
                best_rank = rank
                best_u = u
        return best_u

    def extend(dom: list[int], depth: int) -> bool:
        nonlocal nodes_left
        if depth == np_:
            return True
        u = select(dom)
        cand = dom[u]
        if depth == 0:
            reps = 0
            seen_orbits = set()
            for v in bits(cand):
                r = orbit_of[v]
                if r not in seen_orbits:
                    seen_orbits.add(r)
                    reps |= 1 << v
            cand = reps
        order = sorted(bits(cand), key=lambda v: (hdeg[v] - pdeg[u], v))
        nbrs_u = padj[u]
        for v in order:
            nodes_left -= 1
            if nodes_left < 0:
                raise BudgetExceededError(
                    f"containment search exceeded its node budget of {budget}"
                )
            new_dom = list(dom)
            ok = True
            vbit = 1 << v
            for w in range(np_):
                if assigned[w] >= 0 or w == u:
                    continue
                d = new_dom[w] & ~vbit
                if (nbrs_u >> w) & 1:
                    d &= hadj[v]
                if not d:
                    ok = False
                    break
                new_dom[w] = d
            if ok:
                assigned[u] = v
                if extend(new_dom, depth + 1):
                    return True
                assigned[u] = -1
        return False

    return extend(domains, 0)


def is_family_free(host: Graph, family: Iterable[Graph],
                   budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """True when ``host`` contains no family member; members are tried smallest first."""
    members = sorted(family, key=lambda m: (m.n, m.edge_count, m.adj))
    for member in members:
        if subgraph_contains(host, member, budget=budget):
            return False
    return True


@dataclass(frozen=True)
class SearchReport:
    """Result of an exhaustive extremal search."""

    n: int
    family: tuple[Graph, ...]
    ex_value: int
    witnesses: tuple[Graph, ...]
    explored: int
    elapsed: float


def brute_ex(n: int, family: Iterable[Graph],
             budget: int = DEFAULT_NODE_BUDGET) -> SearchReport:
    """Exact ex(n, family) with the complete set of extremal graphs.

    Exhaustive over isomorphism classes; capped at BRUTE_EX_LIMIT vertices.
    Feasibility within the cap depends on how restrictive the family is.
    """
    family = tuple(family)
    if not family:
        raise ValueError("family must be non-empty")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > BRUTE_EX_LIMIT:
        raise TooLargeError(f"brute_ex is capped at {BRUTE_EX_LIMIT} vertices")
    for member in family:
        if member.edge_count == 0 and member.n <= n:
            raise ValueError(
                "an edgeless family member fits in every graph; ex is undefined"
            )
    start = time.perf_counter()
    explored = 0
    reps: list[Graph] = [Graph(0, ())]
    for k in range(n):
        nxt: dict[bytes, Graph] = {}
        for base in reps:
            masks = _extension_masks(base)
            for mask in masks:
                cand = _extend(base, mask)
                explored += 1
                if is_family_free(cand, family, budget=budget):
                    key = canonical_form(cand).key
                    if key not in nxt:
                        nxt[key] = cand
        reps = [nxt[key] for key in sorted(nxt)]
    ex_value = max(g.edge_count for g in reps)
    witnesses = sorted(
        (g for g in reps if g.edge_count == ex_value),
        key=lambda g: canonical_form(g).key,
    )
    elapsed = time.perf_counter() - start
    return SearchReport(n, family, ex_value, tuple(witnesses), explored, elapsed)


def extremal_witnesses(n: int, family: Iterable[Graph]) -> tuple[Graph, ...]:
    """All non-isomorphic family-free graphs on n vertices with ex(n, family) edges."""
    return brute_ex(n, family).witnesses


def _extend(g: Graph, mask: int) -> Graph:
    """Attach vertex ``g.n`` with neighborhood ``mask``."""
    k = g.n
    adj = [row | (((mask >> v) & 1) << k) for v, row in enumerate(g.adj)]
    adj.append(mask)
    return Graph(k + 1, tuple(adj))


def _extension_masks(g: Graph) -> list[int]:
    """Neighborhood masks up to the automorphisms of ``g``.

    Masks in one orbit of Aut(g) acting on vertex subsets produce isomorphic
    extensions, so one representative per orbit suffices for completeness of
    the leveled enumeration.
    """
    k = g.n
    total = 1 << k
    if k < 4:
        return list(range(total))
    gens = automorphism_generators(g)
    if not gens:
        return list(range(total))
    seen = bytearray(total)
    out = []
    for mask in range(total):
        if seen[mask]:
            continue
        out.append(mask)
        stack = [mask]
        seen[mask] = 1
        while stack:
            m = stack.pop()
            for gen in gens:
                img = 0
                mm = m
                while mm:
                    low = mm & -mm
                    img |= 1 << gen[low.bit_length() - 1]
                    mm ^= low
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
    return out
