"""Closed-form bound evaluators and the per-graph inequality audit.

All formulas are evaluated in exact integer arithmetic.  The two upper
bounds stated with non-integer values (half of a power of three, and a
power of three to a half-integer exponent) are reported as floors together
with a flag saying whether the floor is the exact value.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

from .graph_core import (
    Graph,
    GraphInputError,
    DisconnectedGraphError,
    bfs_all_pairs,
    chromatic_number,
    degeneracy,
    greedy_coloring,
    max_star,
    CHROMATIC_EXACT_LIMIT,
)
from .solver import (
    BudgetExceededError,
    DimensionCertificate,
    edge_metric_dimension,
    metric_dimension,
)


@dataclass(frozen=True)
class BoundParams:
    """Validated (k, D, c) argument bundle for the bound formulas."""

    k: int
    D: int
    c: Optional[int] = None

    def __post_init__(self):
        if self.k < 1:
            raise GraphInputError(f"bound dimension k must be >= 1, got {self.k}")
        if self.D < 1:
            raise GraphInputError(f"bound diameter D must be >= 1, got {self.D}")
        if self.c is not None and not 0 <= self.c <= self.D:
            raise GraphInputError(f"free parameter c must lie in [0, {self.D}], got {self.c}")


def edge_bound_general_c(k: int, D: int, c: int) -> int:
    """Edge count bound (D-c)^k + k * sum_{i=0}^{c} (2i+2)^(k-1), any c in [0, D]."""
    BoundParams(k, D, c)
    return (D - c) ** k + k * sum((2 * i + 2) ** (k - 1) for i in range(c + 1))


def edge_bound_new(k: int, D: int) -> int:
    """Edge count bound (floor(2D/3)+1)^k + k * sum_{i=1}^{ceil(D/3)} (2i)^(k-1).

    This is the general-c bound at c = ceil(D/3) - 1 after an index shift;
    the identity is asserted on every call as a cross-check.
    """
    BoundParams(k, D)
    top = -(-D // 3)  # ceil(D/3)
    value = (2 * D // 3 + 1) ** k + k * sum((2 * i) ** (k - 1) for i in range(1, top + 1))
    assert value == edge_bound_general_c(k, D, top - 1)
    return value


def edge_bound_zubrilina(k: int, D: int) -> int:
    """Edge count bound C(k,2) + k*D^(k-1) + D^k."""
    BoundParams(k, D)
    return k * (k - 1) // 2 + k * D ** (k - 1) + D ** k


def vertex_bound_hernando(k: int, D: int) -> int:
    """Vertex count bound (floor(2D/3)+1)^k + k * sum_{i=1}^{ceil(D/3)} (2i-1)^(k-1)."""
    BoundParams(k, D)
    top = -(-D // 3)
    return (2 * D // 3 + 1) ** k + k * sum((2 * i - 1) ** (k - 1) for i in range(1, top + 1))


def subgraph_vertex_bound(k: int, D: int) -> int:
    """Vertex count bound (D+1)^k for subgraphs of diameter D, via metric dimension k."""
    if k < 1 or D < 0:
        raise GraphInputError(f"subgraph bound requires k >= 1 and D >= 0, got k={k} D={D}")
    return (D + 1) ** k


def subgraph_edge_bound(k: int, D: int) -> int:
    """Edge count bound (D+1)^k for subgraphs of diameter D, via edge metric dimension k."""
    if k < 1 or D < 0:
        raise GraphInputError(f"subgraph bound requires k >= 1 and D >= 0, got k={k} D={D}")
    return (D + 1) ** k


@dataclass(frozen=True)
class PatternBounds:
    """Extremal sizes of the forbidden patterns at dimension k.

    max_clique_md and max_star_emd are exact; the other four are
    lower/upper pairs.  Uppers marked floor are reported as floor values,
    exact only when the matching flag is set.
    """

    k: int
    max_clique_md: int
    max_star_emd: int
    star_md_lower: int
    star_md_upper: int
    biclique_md_lower: int
    biclique_md_upper_floor: int
    biclique_md_upper_exact: bool
    biclique_emd_lower: int
    biclique_emd_upper_floor: int
    biclique_emd_upper_exact: bool


def pattern_bounds(k: int) -> PatternBounds:
    """Evaluate the six extremal pattern sizes at dimension k.

    Clique side (metric dimension): largest clique is exactly 2^k.
    Star sides: largest star is exactly 2^k leaves for edge metric
    dimension, and between 3^k - k - 1 and 3^k - 1 leaves for metric
    dimension.  Balanced biclique sides: between 2^(k//2) - 1 and 3^k / 2
    for metric dimension, and between 2^(k//2) and 3^(k/2) for edge metric
    dimension.  3^k is odd so the md upper floor is never exact; the emd
    upper is exact precisely when k is even.
    """
    if k < 1:
        raise GraphInputError(f"pattern bounds require k >= 1, got {k}")
    return PatternBounds(
        k=k,
        max_clique_md=2 ** k,
        max_star_emd=2 ** k,
        star_md_lower=3 ** k - k - 1,
        star_md_upper=3 ** k - 1,
        biclique_md_lower=2 ** (k // 2) - 1,
        biclique_md_upper_floor=3 ** k // 2,
        biclique_md_upper_exact=False,
        biclique_emd_lower=2 ** (k // 2),
        biclique_emd_upper_floor=isqrt(3 ** k),
        biclique_emd_upper_exact=k % 2 == 0,
    )


@dataclass(frozen=True)
class AuditRecord:
    """Per-graph inequality audit.

    ``checks`` maps check name to pass/fail.  When a solver budget ran out
    the affected dimension is None, its dependent checks are absent, and
    ``budget_exhausted`` is set.  ``chromatic_exact`` distinguishes the
    exact chromatic number from the greedy upper bound used past the exact
    size limit.
    """

    n: int
    m: int
    diameter: int
    dim_value: Optional[int]
    edim_value: Optional[int]
    max_degree: int
    degeneracy: int
    chromatic: int
    chromatic_exact: bool
    checks: dict[str, bool]
    budget_exhausted: bool

    @property
    def passed(self) -> bool:
        return not self.budget_exhausted and all(self.checks.values())

    def failing(self) -> list[str]:
        return sorted(name for name, ok in self.checks.items() if not ok)


def _certificate_or_none(solve, G, budget) -> Optional[DimensionCertificate]:
    try:
        return solve(G, budget=budget)
    except BudgetExceededError:
        return None


def audit_graph(G: Graph, budget: Optional[int] = None) -> AuditRecord:
    """Check every edge/vertex-count, chromatic, and degeneracy inequality
    that the dimensions of G imply.  Bound formulas take the nonempty
    dimension value (resolving sets are nonempty as vertex sets even when
    the empty set distinguishes everything), so single-edge graphs audit
    cleanly; the scaled corollary comparisons use the plain values."""
    D = bfs_all_pairs(G)
    if not D.connected:
        raise DisconnectedGraphError("audit requires a connected graph")
    diam = max(max(row) for row in D.rows)
    m = G.num_edges
    delta = max_star(G)
    degen = degeneracy(G)
    if G.n <= CHROMATIC_EXACT_LIMIT:
        chi, chi_exact = chromatic_number(G), True
    else:
        chi, chi_exact = greedy_coloring(G), False

    dim_cert = _certificate_or_none(metric_dimension, G, budget)
    edim_cert = _certificate_or_none(edge_metric_dimension, G, budget)

    checks: dict[str, bool] = {}
    if dim_cert is not None:
        dim_v, dim_k = dim_cert.value, dim_cert.nonempty_value
        if diam >= 1:
            checks["vertex-bound-hernando"] = G.n <= vertex_bound_hernando(dim_k, diam)
        checks["subgraph-vertex-self"] = G.n <= subgraph_vertex_bound(dim_k, diam)
        checks["max-star-md"] = delta <= 3 ** dim_k - 1
        checks["corollary-edges-md"] = 2 * m <= (3 ** dim_v - 1) * G.n
        checks["corollary-chromatic"] = chi <= 3 ** dim_v
        checks["corollary-degeneracy-md"] = degen <= 3 ** dim_v - 1
    if edim_cert is not None:
        edim_v, edim_k = edim_cert.value, edim_cert.nonempty_value
        if diam >= 1:
            checks["edge-bound-new"] = m <= edge_bound_new(edim_k, diam)
            checks["edge-bound-zubrilina"] = m <= edge_bound_zubrilina(edim_k, diam)
        checks["subgraph-edge-self"] = m <= subgraph_edge_bound(edim_k, diam)
        checks["max-star-emd"] = delta <= 2 ** edim_k
        checks["corollary-edges-emd"] = 2 * m <= 2 ** edim_v * G.n
        checks["corollary-degeneracy-emd"] = degen <= 2 ** edim_v

    return AuditRecord(
        n=G.n,
        m=m,
        diameter=diam,
        dim_value=None if dim_cert is None else dim_cert.value,
        edim_value=None if edim_cert is None else edim_cert.value,
        max_degree=delta,
        degeneracy=degen,
        chromatic=chi,
        chromatic_exact=chi_exact,
        checks=checks,
        budget_exhausted=dim_cert is None or edim_cert is None,
    )
