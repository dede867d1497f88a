"""Closed-form extremal values and the tree case classification.

Building blocks:

    t(n, p)        edges of the Turan graph T(n, p)
    h'(n, p, q)    (q-1)(n-q+1) + t(n-q+1, p), the edge count of the
                   construction joining q-1 independent apexes to T(n-q+1, p)
    h(n, p, q)     h'(n, p, q) + C(q-1, 2), apexes made into a clique
    g1(k), g2(k)   the additive constants of the even/odd minimum-degree rows

``classify`` routes a tree T with p >= 3 to the formula predicting
ex(n, T^{p+1}) for large n. With A the smaller color class and
k = min deg over A:

  k = 1, independence number equal to |B|:  h(n, p, |A|)
  k = 1, independence number above |B|:     h'(n, p, q) + ex(q-1, forbidden
                                            family), q from the decomposition
                                            family of T
  k >= 2: the four-row piecewise formula in q = |A|, applied top-down; the
  printed row conditions overlap on one boundary (both rows are computed
  and compared; a disagreement raises AmbiguousCaseError) and leave a gap
  at hub slack 0 when the row-3 bound is negative (raises
  OutOfTheoremScopeError, reason "case_gap").

All predictions are asymptotic: they are claimed for n at least an explicit
threshold, reported as a warning below 10 times the blow-up order.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum

from .blowup import edge_blowup
from .decomposition import (
    DecompositionFamily,
    ForbiddenFamily,
    decomposition_family,
    forbidden_family,
)
from .errors import (
    AmbiguousCaseError,
    InvalidPartsError,
    NotTreeError,
    OutOfDomainError,
    OutOfTheoremScopeError,
)
from .graphs import Graph, turan_part_sizes
from .search import brute_ex
from .trees import analyze_tree, degree_stratum


def t_count(n: int, p: int) -> int:
    """Edge count of the Turan graph T(n, p)."""
    if p < 1:
        raise InvalidPartsError("part count must be at least 1")
    if n < 0:
        raise OutOfDomainError("n must be non-negative")
    total = n * (n - 1) // 2
    return total - sum(s * (s - 1) // 2 for s in turan_part_sizes(n, p))


def g_values(k: int) -> tuple[int, int]:
    """The pair (g1(k), g2(k)) for k >= 2.

    g1(k) = k^2 - 3k/2 for even k and k^2 - (3k-1)/2 for odd k;
    g2(k) = k^2 - 3k/2 for even k and k^2 - k for odd k.
    """
    if k < 2:
        raise OutOfDomainError("g values are defined for k >= 2")
    if k % 2 == 0:
        g1 = k * k - 3 * k // 2
        g2 = g1
    else:
        g1 = k * k - (3 * k - 1) // 2
        g2 = k * k - k
    return g1, g2


def h_prime(n: int, p: int, q: int) -> int:
    """Edges of q-1 independent apexes joined to T(n-q+1, p)."""
    _check_hq(n, p, q)
    return (q - 1) * (n - q + 1) + t_count(n - q + 1, p)


def h_value(n: int, p: int, q: int) -> int:
    """h'(n, p, q) plus a clique on the q-1 apexes."""
    return h_prime(n, p, q) + (q - 1) * (q - 2) // 2


def _check_hq(n: int, p: int, q: int):
    if p < 1:
        raise InvalidPartsError("part count must be at least 1")
    if q < 1:
        raise OutOfDomainError("q must be at least 1")
    if n < q:
        raise OutOfDomainError(f"need n >= q, got n={n}, q={q}")


class Case(Enum):
    """Which formula row predicts ex(n, T^{p+1})."""

    DELTA1_ALPHA_EQ = "delta1_alpha_eq"
    DELTA1_ALPHA_GT = "delta1_alpha_gt"
    DELTA_EVEN = "delta_even"
    DELTA_ODD_NO_HUBS = "delta_odd_no_hubs"
    DELTA_ODD_SMALL_SLACK = "delta_odd_small_slack"
    DELTA_ODD_LARGE_SLACK = "delta_odd_large_slack"


@dataclass(frozen=True)
class Prediction:
    """A classified tree plus the formula it maps to.

    ``value_at(n)`` is base(n, p, q) + constant, where base is h or h'.
    Every prediction is asymptotic only; below ``n_min()`` the value is
    still returned but flagged unverified.
    """

    tree: Graph
    p: int
    case: Case
    q: int
    base: str
    constant: int
    detail: dict = field(compare=False)
    forbidden: ForbiddenFamily | None = None

    asymptotic_only = True

    def value_at(self, n: int) -> int:
        fn = h_value if self.base == "h" else h_prime
        return fn(n, self.p, self.q) + self.constant

    def n_min(self, override: int | None = None) -> int:
        if override is not None:
            return override
        blowup_order = self.tree.n + self.tree.edge_count * (self.p - 1)
        return 10 * blowup_order

    def warnings_for(self, n: int, n_min_override: int | None = None) -> list[str]:
        threshold = self.n_min(n_min_override)
        if n < threshold:
            return [
                f"n={n} is below the asymptotic threshold {threshold}; "
                "the predicted value is unverified at this size"
            ]
        return []


def classify(t: Graph, p: int) -> Prediction:
    """Route a tree on at least 2 vertices to its extremal formula."""
    if not (t.n >= 2 and t.is_tree()):
        raise NotTreeError("classification needs a tree on at least 2 vertices")
    if p < 3:
        raise OutOfTheoremScopeError(
            f"the classified formulas need p >= 3, got p={p}", reason="p_below_3"
        )
    an = analyze_tree(t)
    size_a = len(an.bip.class_a)
    size_b = len(an.bip.class_b)
    k = an.delta_a
    if k == 1:
        if an.alpha == size_b:
            return Prediction(
                tree=t, p=p, case=Case.DELTA1_ALPHA_EQ, q=size_a,
                base="h", constant=0,
                detail={"k": k, "alpha": an.alpha, "class_b": size_b},
            )
        family = decomposition_family(t)
        forb = forbidden_family(t, family)
        report = brute_ex(family.q_min - 1, forb.members)
        return Prediction(
            tree=t, p=p, case=Case.DELTA1_ALPHA_GT, q=family.q_min,
            base="h_prime", constant=report.ex_value,
            detail={
                "k": k,
                "alpha": an.alpha,
                "class_b": size_b,
                "ex_forbidden": report.ex_value,
                "forbidden_mode": forb.mode.value,
            },
            forbidden=forb,
        )
    return _classify_high_degree(t, p, k, size_a)


def _classify_high_degree(t: Graph, p: int, k: int, q: int) -> Prediction:
    g1, g2 = g_values(k)
    stratum = degree_stratum(t)
    detail = {"k": k, "g1": g1, "g2": g2, "hub_slack": stratum.hub_slack}
    if k % 2 == 0:
        return Prediction(t, p, Case.DELTA_EVEN, q, "h", g1, detail)
    if not stratum.hubs:
        return Prediction(t, p, Case.DELTA_ODD_NO_HUBS, q, "h", g2, detail)
    b = stratum.hub_slack
    bound = q - 1 - math.ceil((k - 1) / (q - 1))
    detail["row3_bound"] = bound
    small = 0 <= b <= bound
    large = b >= max(1, bound)
    large_constant = g2 + (q - 1) * (b - 1) // 2
    if small and large:
        # overlap of the printed rows: accept only if both formulas agree
        clique_part = (q - 1) * (q - 2) // 2
        if clique_part + g1 != large_constant:
            raise AmbiguousCaseError(
                f"rows 3 and 4 both apply at hub slack {b} but disagree: "
                f"h+{g1} versus h'+{large_constant}"
            )
        return Prediction(t, p, Case.DELTA_ODD_SMALL_SLACK, q, "h", g1, detail)
    if small:
        return Prediction(t, p, Case.DELTA_ODD_SMALL_SLACK, q, "h", g1, detail)
    if large:
        return Prediction(t, p, Case.DELTA_ODD_LARGE_SLACK, q, "h_prime",
                          large_constant, detail)
    raise OutOfTheoremScopeError(
        f"no formula row covers hub slack {b} with row-3 bound {bound}",
        reason="case_gap",
    )


def predict(t: Graph, p: int, n: int, n_min_override: int | None = None) -> int:
    """Predicted ex(n, T^{p+1}).

    Below the asymptotic threshold the value is still returned but a
    RuntimeWarning is emitted; ``prediction_report`` carries the same
    information as data.
    """
    pred = classify(t, p)
    for message in pred.warnings_for(n, n_min_override):
        warnings.warn(message, RuntimeWarning, stacklevel=2)
    return pred.value_at(n)


def prediction_report(t: Graph, p: int, n: int,
                      n_min_override: int | None = None) -> dict:
    """JSON-ready report: case, q, term breakdown, value, warnings."""
    from .graphio import encode_graph6

    pred = classify(t, p)
    fn = h_value if pred.base == "h" else h_prime
    base_value = fn(n, pred.p, pred.q)
    report = {
        "case": pred.case.value,
        "q": pred.q,
        "terms": {
            "base": pred.base,
            "base_value": base_value,
            "constant": pred.constant,
        },
        "detail": dict(pred.detail),
        "value": base_value + pred.constant,
        "n_min": pred.n_min(n_min_override),
        "asymptotic_only": True,
        "warnings": pred.warnings_for(n, n_min_override),
    }
    if pred.forbidden is not None:
        report["forbidden_family"] = [
            encode_graph6(g).decode("ascii") for g in pred.forbidden.members
        ]
        report["forbidden_mode"] = pred.forbidden.mode.value
    return report
