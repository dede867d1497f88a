"""Extremal graph constructions.

The base construction joins q-1 apex vertices (ids 0..q-2) to a Turan graph
T(n-q+1, p) on the remaining ids. Leaving the apex set independent gives
h'(n, p, q) edges; making it a clique gives h(n, p, q). For trees in the
decomposition-family case, the conjectured extremal graphs place every
extremal forbidden-family-free graph Q on the apex set instead, for
h'(n, p, q) + ex(q-1, forbidden family) edges each.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_form, canonical_graph
from .errors import OutOfDomainError, OutOfTheoremScopeError
from .formulas import Case, Prediction, classify, h_prime
from .graphs import Graph, bits, complete_graph, empty_graph, join, turan_graph, turan_part_sizes
from .search import extremal_witnesses


@dataclass(frozen=True)
class ExtremalCandidate:
    """A candidate extremal graph with its apex/part structure.

    ``embedded`` is the graph placed on the apex set (in canonical vertex
    order); the remaining ids hold the Turan graph, parts in contiguous
    blocks.
    """

    graph: Graph
    apex_set: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]
    embedded: Graph

    def __post_init__(self):
        n_check = len(self.apex_set) + sum(len(p) for p in self.parts)
        assert n_check == self.graph.n
        assert self.embedded.n == len(self.apex_set)


def _apex_join(n: int, p: int, q: int, embedded: Graph) -> ExtremalCandidate:
    if n < q:
        raise OutOfDomainError(f"need n >= q, got n={n}, q={q}")
    base = join(embedded, turan_graph(n - q + 1, p))
    apexes = tuple(range(q - 1))
    parts = []
    start = q - 1
    for size in turan_part_sizes(n - q + 1, p):
        parts.append(tuple(range(start, start + size)))
        start += size
    return ExtremalCandidate(base, apexes, tuple(parts), embedded)


def build_h_prime(n: int, p: int, q: int) -> ExtremalCandidate:
    """Independent apexes joined to T(n-q+1, p); h'(n, p, q) edges."""
    cand = _apex_join(n, p, q, empty_graph(q - 1))
    assert cand.graph.edge_count == h_prime(n, p, q)
    return cand


def build_h(n: int, p: int, q: int) -> ExtremalCandidate:
    """Apex clique joined to T(n-q+1, p); h(n, p, q) edges."""
    from .formulas import h_value

    cand = _apex_join(n, p, q, complete_graph(q - 1))
    assert cand.graph.edge_count == h_value(n, p, q)
    return cand


def build_candidates(t: Graph, p: int, n: int) -> tuple[ExtremalCandidate, ...]:
    """All conjectured extremal graphs for a decomposition-family tree.

    Only defined for trees classified to the decomposition-family case;
    other cases raise OutOfTheoremScopeError. One candidate is built per
    extremal forbidden-family-free graph on q-1 vertices, deduplicated up
    to isomorphism.
    """
    pred = classify(t, p)
    return build_candidates_from(pred, n)


def build_candidates_from(pred: Prediction, n: int) -> tuple[ExtremalCandidate, ...]:
    if pred.case is not Case.DELTA1_ALPHA_GT or pred.forbidden is None:
        raise OutOfTheoremScopeError(
            f"extremal candidates are defined for the decomposition-family case, "
            f"not {pred.case.value}",
            reason="wrong_case",
        )
    q = pred.q
    witnesses = extremal_witnesses(q - 1, pred.forbidden.members)
    out = []
    seen: set[bytes] = set()
    for quotient in witnesses:
        cand = _apex_join(n, pred.p, q, canonical_graph(quotient))
        assert cand.graph.edge_count == h_prime(n, pred.p, q) + quotient.edge_count
        key = canonical_form(cand.graph).key
        if key not in seen:
            seen.add(key)
            out.append(cand)
    return tuple(out)
