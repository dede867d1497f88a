"""Tree and forest invariants feeding the extremal formulas.

Everything here is exact. The independence, covering, and matching numbers
each have two routes: a fast structural one (tree DP, augmenting paths) and
an exhaustive one for small general graphs; the test suite cross-checks the
routes against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotBipartiteError, NotTreeError, TooLargeError
from .graphs import Graph, bits

EXHAUSTIVE_LIMIT = 20


@dataclass(frozen=True)
class Bipartition:
    """The two color classes, with ``len(class_a) <= len(class_b)``.

    Ties are broken by putting the lexicographically smaller vertex set in
    ``class_a``. Sole exception: the degenerate single-vertex graph is
    reported as ``({v}, {})``.
    """

    class_a: frozenset[int]
    class_b: frozenset[int]


@dataclass(frozen=True)
class DegreeStratum:
    """Minimum-degree stratum of a tree's smaller color class.

    ``delta_a`` is the minimum degree over class A; ``tight`` the class-A
    vertices achieving it; ``hubs`` the class-B vertices adjacent to at
    least two tight vertices; ``hub_slack`` the minimum hub degree minus 2,
    or None when there are no hubs.
    """

    delta_a: int
    tight: frozenset[int]
    hubs: frozenset[int]
    hub_slack: int | None


@dataclass(frozen=True)
class TreeAnalysis:
    tree: Graph
    bip: Bipartition
    delta_a: int
    alpha: int
    beta: int
    nu: int
    q: int
    degenerate: bool


def _two_color(g: Graph) -> tuple[int, int]:
    """Proper 2-coloring as two bitmasks; per component the side containing
    the smallest vertex goes first. Raises on odd cycles."""
    color = [-1] * g.n
    side0 = 0
    side1 = 0
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    raise NotBipartiteError("graph contains an odd cycle")
    for v, c in enumerate(color):
        if c == 0:
            side0 |= 1 << v
        else:
            side1 |= 1 << v
    return side0, side1


def bipartition(g: Graph) -> Bipartition:
    """Bipartition with the documented size and lexicographic tie-break."""
    side0, side1 = _two_color(g)
    a = sorted(bits(side0))
    b = sorted(bits(side1))
    if g.n == 1:
        return Bipartition(frozenset(a), frozenset(b))
    if (len(a), a) > (len(b), b):
        a, b = b, a
    return Bipartition(frozenset(a), frozenset(b))


def is_bipartite(g: Graph) -> bool:
    try:
        _two_color(g)
        return True
    except NotBipartiteError:
        return False


# ---------------------------------------------------------------------------
# independence, covering, matching
# ---------------------------------------------------------------------------


def independence_number(g: Graph) -> int:
    """Maximum independent set size; tree DP on forests, exhaustive otherwise."""
    if g.is_forest():
        return _alpha_forest(g)
    if g.n > EXHAUSTIVE_LIMIT:
        raise TooLargeError(
            f"exact independence number needs a forest or at most {EXHAUSTIVE_LIMIT} vertices"
        )
    return _alpha_exhaustive(g)


def _alpha_forest(g: Graph) -> int:
    total = 0
    for comp in g.components():
        root = comp[0]
        excl: dict[int, int] = {}
        incl: dict[int, int] = {}
        stack = [(root, -1, False)]
        while stack:
            v, parent, done = stack.pop()
            children = [u for u in bits(g.adj[v]) if u != parent]
            if not done:
                stack.append((v, parent, True))
                for u in children:
                    stack.append((u, v, False))
            else:
                excl[v] = sum(max(excl[u], incl[u]) for u in children)
                incl[v] = 1 + sum(excl[u] for u in children)
        total += max(excl[root], incl[root])
    return total


def _alpha_exhaustive(g: Graph) -> int:
    adj = g.adj
    best = 0

    def grow(avail: int, size: int):
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        if not avail:
            best = max(best, size)
            return
        # branch on a maximum-degree available vertex
        v = max(bits(avail), key=lambda x: (adj[x] & avail).bit_count())
        grow(avail & ~((1 << v) | adj[v]), size + 1)
        grow(avail ^ (1 << v), size)

    grow((1 << g.n) - 1, 0)
    return best


def covering_number(g: Graph) -> int:
    """Minimum vertex cover size; complements a maximum independent set."""
    return g.n - independence_number(g)


def matching_number(g: Graph) -> int:
    """Maximum matching size; augmenting paths on bipartite inputs."""
    try:
        side0, _ = _two_color(g)
        return _matching_bipartite(g, list(bits(side0)))
    except NotBipartiteError:
        pass
    if g.n > EXHAUSTIVE_LIMIT:
        raise TooLargeError(
            f"exact matching number needs a bipartite graph or at most {EXHAUSTIVE_LIMIT} vertices"
        )
    return _matching_exhaustive(g)


def _matching_bipartite(g: Graph, left: list[int]) -> int:
    match: dict[int, int] = {}

    def augment(v: int, seen: set[int]) -> bool:
        for u in bits(g.adj[v]):
            if u in seen:
                continue
            seen.add(u)
            if u not in match or augment(match[u], seen):
                match[u] = v
                return True
        return False

    size = 0
    for v in left:
        if augment(v, set()):
            size += 1
    return size


def _matching_exhaustive(g: Graph) -> int:
    adj = g.adj
    memo: dict[int, int] = {}

    def solve(avail: int) -> int:
        # drop vertices with no available neighbor, then branch on the lowest
        while avail:
            v = (avail & -avail).bit_length() - 1
            if adj[v] & avail:
                break
            avail ^= 1 << v
        if not avail:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        v = (avail & -avail).bit_length() - 1
        rest = avail ^ (1 << v)
        best = solve(rest)
        nb = adj[v] & rest
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            best = max(best, 1 + solve(rest ^ (1 << u)))
        memo[avail] = best
        return best

    return solve((1 << g.n) - 1)


def independent_covering_number(g: Graph) -> int:
    """Minimum size of an independent set meeting every edge.

    In a connected bipartite graph with an edge, an independent covering is
    exactly one of the two color classes, so each component with at least
    two vertices contributes the smaller class; isolated vertices contribute
    nothing.
    """
    _two_color(g)
    total = 0
    for comp in g.components():
        if len(comp) == 1:
            continue
        sub_mask = 0
        for v in comp:
            sub_mask |= 1 << v
        color = {comp[0]: 0}
        queue = [comp[0]]
        ones = 0
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v] & sub_mask):
                if u not in color:
                    color[u] = color[v] ^ 1
                    ones += color[u]
                    queue.append(u)
        total += min(ones, len(comp) - ones)
    return total


# ---------------------------------------------------------------------------
# bundled analysis
# ---------------------------------------------------------------------------


def _require_tree(t: Graph, minimum: int = 1):
    if t.n < minimum or not t.is_tree():
        raise NotTreeError(
            f"input must be a connected acyclic graph on at least {minimum} vertices"
        )


def degree_stratum(t: Graph) -> DegreeStratum:
    """Minimum-degree stratum parameters of a tree on at least 2 vertices."""
    _require_tree(t, minimum=2)
    bip = bipartition(t)
    delta_a = min(t.degree(v) for v in bip.class_a)
    tight = frozenset(v for v in bip.class_a if t.degree(v) == delta_a)
    hubs = frozenset(
        y for y in bip.class_b
        if sum(1 for u in bits(t.adj[y]) if u in tight) >= 2
    )
    hub_slack = min(t.degree(y) for y in hubs) - 2 if hubs else None
    return DegreeStratum(delta_a, tight, hubs, hub_slack)


def analyze_tree(t: Graph) -> TreeAnalysis:
    """All invariants of a tree in one bundle, with consistency asserts."""
    _require_tree(t)
    bip = bipartition(t)
    alpha = independence_number(t)
    beta = covering_number(t)
    nu = matching_number(t)
    q = independent_covering_number(t)
    if t.n == 1:
        return TreeAnalysis(t, bip, 0, alpha, beta, nu, q, degenerate=True)
    delta_a = min(t.degree(v) for v in bip.class_a)
    assert alpha + beta == t.n
    assert beta == nu
    assert q == len(bip.class_a)
    assert alpha >= len(bip.class_b)
    return TreeAnalysis(t, bip, delta_a, alpha, beta, nu, q, degenerate=False)
