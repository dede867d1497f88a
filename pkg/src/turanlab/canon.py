"""Exact graph canonicalization.

``canonical_form`` maps isomorphic graphs to identical byte keys and
non-isomorphic graphs to distinct keys, with no hashing shortcuts. The key
is the graph6 encoding of a canonically relabeled copy, so sorted key lists
double as interchange data.

Forests take a linear-time path: root each component at its center (or at
the lexicographically better of the two centers), sort subtrees by their
recursive code, and read the labeling off a preorder walk. This handles the
large matchings produced by vertex splitting at any size.

Everything else goes through individualization-refinement backtracking: the
vertex partition is refined to equitability by neighbor counts, the first
non-singleton cell is branched on, and the lexicographically smallest
adjacency code over all leaves of the search tree is canonical. Leaves that
reproduce the current best code yield automorphisms, whose orbits prune
symmetric branches. Exactness is favored over speed; the general path is
capped at GENERAL_LIMIT vertices (forests are exempt).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLargeError
from .graphs import Graph, bits
from .graphio import encode_graph6

GENERAL_LIMIT = 32


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Total-ordered byte key; equal keys mean isomorphic graphs."""

    key: bytes


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Canonical vertex order: position i of the output holds vertex order[i].

    Two isomorphic graphs relabeled by their canonical orders become equal
    as labeled graphs.
    """
    if g.is_forest():
        return _forest_order(g)
    if g.n > GENERAL_LIMIT:
        raise TooLargeError(
            f"canonical labeling of non-forests is capped at {GENERAL_LIMIT} vertices"
        )
    order, _ = _ir_search(g)
    return order


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative: ``g`` relabeled by its canonical order."""
    order = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(encode_graph6(canonical_graph(g)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Generators of (a subgroup of) the automorphism group, found during search.

    The discovered set is not guaranteed to generate the full group, so the
    orbits derived from it may be finer than the true orbits; callers must
    only rely on the guarantee that each generator is an automorphism.
    """
    if g.n > GENERAL_LIMIT:
        raise TooLargeError(
            f"automorphism search is capped at {GENERAL_LIMIT} vertices"
        )
    _, gens = _ir_search(g)
    return gens


def automorphism_orbits(g: Graph) -> list[int]:
    """Orbit representative per vertex under the discovered automorphisms."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in automorphism_generators(g):
        for v, w in enumerate(gen):
            rv, rw = find(v), find(w)
            if rv != rw:
                parent[max(rv, rw)] = min(rv, rw)
    return [find(v) for v in range(g.n)]


# ---------------------------------------------------------------------------
# forest path
# ---------------------------------------------------------------------------


def _forest_order(g: Graph) -> tuple[int, ...]:
    keyed = []
    for comp in g.components():
        code, order = _component_order(g, comp)
        keyed.append((code, order))
    keyed.sort(key=lambda item: item[0])
    return tuple(v for _, order in keyed for v in order)


def _component_order(g: Graph, comp: list[int]) -> tuple[bytes, list[int]]:
    if len(comp) == 1:
        return b"()", [comp[0]]
    best = None
    for root in _tree_centers(g, comp):
        code, order = _rooted_code(g, root)
        if best is None or code < best[0]:
            best = (code, order)
    return best


def _tree_centers(g: Graph, comp: list[int]) -> list[int]:
    comp_mask = 0
    for v in comp:
        comp_mask |= 1 << v
    alive = comp_mask
    deg = {v: (g.adj[v] & comp_mask).bit_count() for v in comp}
    count = len(comp)
    while count > 2:
        leaves = [v for v in bits(alive) if deg[v] <= 1]
        for v in leaves:
            alive ^= 1 << v
            count -= 1
            for u in bits(g.adj[v] & alive):
                deg[u] -= 1
    return list(bits(alive))


def _rooted_code(g: Graph, root: int) -> tuple[bytes, list[int]]:
    # Iterative post-order; children are sorted by (code, id) so that the
    # emitted order is canonical up to subtree isomorphism.
    code: dict[int, bytes] = {}
    kids: dict[int, list[int]] = {}
    stack = [(root, -1, False)]
    while stack:
        v, parent, done = stack.pop()
        children = [u for u in bits(g.adj[v]) if u != parent]
        if not done:
            stack.append((v, parent, True))
            for u in children:
                stack.append((u, v, False))
        else:
            ranked = sorted(children, key=lambda u: (code[u], u))
            kids[v] = ranked
            code[v] = b"(" + b"".join(code[u] for u in ranked) + b")"
    order = []
    walk = [root]
    while walk:
        v = walk.pop()
        order.append(v)
        walk.extend(reversed(kids[v]))
    return code[root], order


# ---------------------------------------------------------------------------
# individualization-refinement path
# ---------------------------------------------------------------------------


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition to equitability.

    Each cell is split by the vector of neighbor counts into every current
    cell; sub-cells are ordered by ascending count vector. The procedure is
    isomorphism-invariant because cells are only ever addressed by position.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        if not changed:
            return new_cells
        cells = new_cells


def _ir_search(g: Graph) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    n = g.n
    adj = g.adj
    if n == 0:
        return (), []
    best_code: int | None = None
    best_order: list[int] = []
    gens: list[tuple[int, ...]] = []
    gen_pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    seen_gens: set[tuple[int, ...]] = set()

    def visit_leaf(order: list[int]):
        nonlocal best_code, best_order
        bits_acc = 0
        for i in range(n):
            row = adj[order[i]]
            for j in range(i + 1, n):
                bits_acc = (bits_acc << 1) | ((row >> order[j]) & 1)
        if best_code is None or bits_acc < best_code:
            best_code = bits_acc
            best_order = list(order)
        elif bits_acc == best_code:
            gamma = [0] * n
            for i in range(n):
                gamma[best_order[i]] = order[i]
            tg = tuple(gamma)
            if tg not in seen_gens and any(gamma[v] != v for v in range(n)):
                seen_gens.add(tg)
                inv = [0] * n
                for v, w in enumerate(gamma):
                    inv[w] = v
                gens.append(tg)
                gen_pairs.append((tg, tuple(inv)))

    def orbit_hits(tried: list[int], v: int, fixed: tuple[int, ...]) -> bool:
        usable = [pair for pair in gen_pairs
                  if all(pair[0][f] == f for f in fixed)]
        if not usable:
            return False
        tried_set = set(tried)
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for fwd, inv in usable:
                for y in (fwd[x], inv[x]):
                    if y in tried_set:
                        return True
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
        return False

    def recurse(cells: list[list[int]], fixed: tuple[int, ...]):
        target = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target < 0:
            visit_leaf([cell[0] for cell in cells])
            return
        cell = cells[target]
        tried: list[int] = []
        for v in sorted(cell):
            if tried and orbit_hits(tried, v, fixed):
                continue
            split = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]
            recurse(_refine(adj, split), fixed + (v,))
            tried.append(v)

    recurse(_refine(adj, [list(range(n))]), ())
    return tuple(best_order), gens
