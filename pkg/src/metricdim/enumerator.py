"""Isomorph-free enumeration of small connected graphs and theorem sweeps.

Canonical form is the minimal graph6 string over all vertex relabelings.
It is computed by a level DP over partial placements: the graph6 bitstring
is a sequence of columns (one per placed vertex, listing adjacency to the
earlier vertices), so placements are extended one vertex at a time keeping
only the extensions whose next column is minimal, and surviving states are
collapsed whenever they have the same placed set and give every unplaced
vertex the same adjacency pattern toward the placed sequence -- such states
have identical futures.  Collapsing keeps highly symmetric graphs (K_n,
bicliques) from blowing up the state list factorially.

Enumeration is by augmentation: every connected graph on n vertices has a
non-cut vertex, so deleting one leaves a connected graph on n-1 vertices;
attaching a new vertex to every nonempty subset of every (n-1)-class and
deduplicating by canonical form therefore reaches every n-class exactly
once.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from .bounds import (
    edge_bound_new,
    edge_bound_zubrilina,
    subgraph_edge_bound,
    subgraph_vertex_bound,
    vertex_bound_hernando,
)
from .characterizations import (
    char_edim_eq_n2,
    char_edim_ge_n2,
    char_edim_n1,
    tuple_lemma_check,
)
from .graph_core import (
    Graph,
    SizeLimitError,
    bfs_all_pairs,
    bits,
    chromatic_number,
    degeneracy,
    complete_graph,
    from_edge_list,
    graph6_decode,
    graph6_encode,
    max_clique,
    max_star,
    relabeled,
)
from .solver import (
    BudgetExceededError,
    edge_metric_dimension,
    metric_dimension,
)

CANONICAL_LIMIT = 10
ENUMERATION_LIMIT = 8
ENUMERATION_HARD_LIMIT = 9
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical adjacency encoding; equal forms iff isomorphic graphs."""

    bytes: bytes


def canonical_relabeling(G: Graph) -> tuple[int, ...]:
    """Vertex order (new index -> old vertex) minimizing the graph6 string."""
    n = G.n
    if n > CANONICAL_LIMIT:
        raise SizeLimitError(f"canonical form supports n <= {CANONICAL_LIMIT}, got {n}")
    if n == 0:
        return ()
    full = (1 << n) - 1
    # state: (placed mask, placed order, rev) where rev[v] holds v's
    # adjacency toward the placed sequence, earliest placement most
    # significant -- exactly the next graph6 column if v is placed next
    states = [(0, (), (0,) * n)]
    for _ in range(n):
        best = None
        chosen = []
        for mask, placed, rev in states:
            for c in bits(full & ~mask):
                col = rev[c]
                if best is None or col < best:
                    best = col
                    chosen = [(mask, placed, rev, c)]
                elif col == best:
                    chosen.append((mask, placed, rev, c))
        nxt = {}
        for mask, placed, rev, c in chosen:
            nmask = mask | 1 << c
            adjc = G.adj[c]
            nrev = tuple(rev[v] << 1 | adjc >> v & 1 for v in range(n))
            key = (nmask, tuple(nrev[v] for v in bits(full & ~nmask)))
            if key not in nxt:
                nxt[key] = (nmask, placed + (c,), nrev)
        states = list(nxt.values())
    return states[0][1]


def canonical_graph6(G: Graph) -> str:
    return graph6_encode(relabeled(G, canonical_relabeling(G)))


def canonical_form(G: Graph) -> CanonicalForm:
    return CanonicalForm(canonical_graph6(G).encode("ascii"))


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[str, ...]:
    if n == 1:
        return (graph6_encode(complete_graph(1)),)
    seen = set()
    for parent_g6 in _connected_classes(n - 1):
        parent = graph6_decode(parent_g6)
        base_edges = parent.edges()
        for mask in range(1, 1 << (n - 1)):
            edges = base_edges + [(v, n - 1) for v in bits(mask)]
            seen.add(canonical_graph6(from_edge_list(n, edges)))
    return tuple(sorted(seen))


def enumerate_connected(n: int, allow_large: bool = False) -> list[Graph]:
    """One representative per isomorphism class of connected n-vertex
    graphs, ordered by canonical graph6 string.  n = 9 takes minutes and
    sits behind the allow_large flag."""
    limit = ENUMERATION_HARD_LIMIT if allow_large else ENUMERATION_LIMIT
    if not 1 <= n <= limit:
        raise SizeLimitError(f"enumeration supports 1 <= n <= {limit}, got n={n}")
    return [graph6_decode(s) for s in _connected_classes(n)]


# ---------------------------------------------------------------------------
# solved statistics shared by the sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    diameter: int
    dim: Optional[int]
    dim_nonempty: Optional[int]
    edim: Optional[int]
    edim_nonempty: Optional[int]
    max_degree: int
    max_clique_size: int
    degeneracy: int
    chromatic: int

    @property
    def budget_exhausted(self) -> bool:
        return self.dim is None or self.edim is None


@lru_cache(maxsize=65536)
def _stats(g6: str, budget: Optional[int]) -> GraphStats:
    G = graph6_decode(g6)
    D = bfs_all_pairs(G)
    try:
        dim_cert = metric_dimension(G, budget=budget)
    except BudgetExceededError:
        dim_cert = None
    try:
        edim_cert = edge_metric_dimension(G, budget=budget)
    except BudgetExceededError:
        edim_cert = None
    return GraphStats(
        n=G.n,
        m=G.num_edges,
        diameter=max(max(row) for row in D.rows),
        dim=None if dim_cert is None else dim_cert.value,
        dim_nonempty=None if dim_cert is None else dim_cert.nonempty_value,
        edim=None if edim_cert is None else edim_cert.value,
        edim_nonempty=None if edim_cert is None else edim_cert.nonempty_value,
        max_degree=max_star(G),
        max_clique_size=len(max_clique(G)),
        degeneracy=degeneracy(G),
        chromatic=chromatic_number(G),
    )


# ---------------------------------------------------------------------------
# sweep registry
# ---------------------------------------------------------------------------

# each check maps (graph, its stats) -> failure detail string or None
_CheckFn = Callable[[Graph, GraphStats], Optional[str]]


def _check_char1_equiv(G: Graph, st: GraphStats) -> Optional[str]:
    holds, pair = char_edim_n1(G)
    expected = st.edim == st.n - 1
    if holds != expected:
        return f"predicate={holds} edim={st.edim} n={st.n} pair={pair}"
    return None


def _check_char2_equiv(G: Graph, st: GraphStats) -> Optional[str]:
    res = char_edim_ge_n2(G)
    expected = st.edim >= st.n - 2
    if res.holds != expected:
        return f"predicate={res.holds} edim={st.edim} n={st.n} triple={res.failing_triple}"
    return None


def _check_eq_n2_equiv(G: Graph, st: GraphStats) -> Optional[str]:
    holds = char_edim_eq_n2(G)
    expected = st.edim == st.n - 2
    if holds != expected:
        return f"predicate={holds} edim={st.edim} n={st.n}"
    return None


def _check_tuple_lemma(G: Graph, st: GraphStats) -> Optional[str]:
    k = st.n - st.edim
    res = tuple_lemma_check(G, k)
    if not res.holds:
        return f"k={k} violating={res.violating}"
    return None


def _check_diam_le_5(G: Graph, st: GraphStats) -> Optional[str]:
    if st.edim == st.n - 2 and st.diameter > 5:
        return f"edim=n-2 but diameter={st.diameter}"
    return None


def _check_diam_3k1(G: Graph, st: GraphStats) -> Optional[str]:
    k = st.n - st.edim
    if st.diameter > 3 * k - 1:
        return f"k={k} diameter={st.diameter} bound={3 * k - 1}"
    return None


def _check_edge_bound_new(G: Graph, st: GraphStats) -> Optional[str]:
    bound = edge_bound_new(st.edim_nonempty, st.diameter)
    if st.m > bound:
        return f"m={st.m} bound={bound} edim={st.edim} D={st.diameter}"
    return None


def _check_edge_bound_zubrilina(G: Graph, st: GraphStats) -> Optional[str]:
    bound = edge_bound_zubrilina(st.edim_nonempty, st.diameter)
    if st.m > bound:
        return f"m={st.m} bound={bound} edim={st.edim} D={st.diameter}"
    return None


def _check_vertex_bound_hernando(G: Graph, st: GraphStats) -> Optional[str]:
    bound = vertex_bound_hernando(st.dim_nonempty, st.diameter)
    if st.n > bound:
        return f"n={st.n} bound={bound} dim={st.dim} D={st.diameter}"
    return None


def _check_subgraph_bounds_self(G: Graph, st: GraphStats) -> Optional[str]:
    vb = subgraph_vertex_bound(st.dim_nonempty, st.diameter)
    eb = subgraph_edge_bound(st.edim_nonempty, st.diameter)
    if st.n > vb:
        return f"n={st.n} bound={vb} dim={st.dim} D={st.diameter}"
    if st.m > eb:
        return f"m={st.m} bound={eb} edim={st.edim} D={st.diameter}"
    return None


def _check_corollary_edges_md(G: Graph, st: GraphStats) -> Optional[str]:
    if 2 * st.m > (3 ** st.dim - 1) * st.n:
        return f"2m={2 * st.m} bound={(3 ** st.dim - 1) * st.n} dim={st.dim}"
    return None


def _check_corollary_edges_emd(G: Graph, st: GraphStats) -> Optional[str]:
    if 2 * st.m > 2 ** st.edim * st.n:
        return f"2m={2 * st.m} bound={2 ** st.edim * st.n} edim={st.edim}"
    return None


def _check_corollary_chromatic(G: Graph, st: GraphStats) -> Optional[str]:
    if st.chromatic > 3 ** st.dim:
        return f"chromatic={st.chromatic} bound={3 ** st.dim} dim={st.dim}"
    return None


def _check_corollary_degeneracy(G: Graph, st: GraphStats) -> Optional[str]:
    if st.degeneracy > 3 ** st.dim - 1:
        return f"degeneracy={st.degeneracy} bound={3 ** st.dim - 1} dim={st.dim}"
    if st.degeneracy > 2 ** st.edim:
        return f"degeneracy={st.degeneracy} bound={2 ** st.edim} edim={st.edim}"
    return None


THEOREM_CHECKS: dict[str, _CheckFn] = {
    "char1-equiv": _check_char1_equiv,
    "char2-equiv": _check_char2_equiv,
    "eq-n2-equiv": _check_eq_n2_equiv,
    "tuple-lemma": _check_tuple_lemma,
    "diam-le-5": _check_diam_le_5,
    "diam-le-3k-1": _check_diam_3k1,
    "edge-bound-new": _check_edge_bound_new,
    "edge-bound-zubrilina": _check_edge_bound_zubrilina,
    "vertex-bound-hernando": _check_vertex_bound_hernando,
    "subgraph-bounds-self": _check_subgraph_bounds_self,
    "corollary-edges-md": _check_corollary_edges_md,
    "corollary-edges-emd": _check_corollary_edges_emd,
    "corollary-chromatic": _check_corollary_chromatic,
    "corollary-degeneracy": _check_corollary_degeneracy,
    "clique-vs-edim-explore": None,  # data sweep, handled separately
}

SWEEP_N_MIN = 3


@dataclass(frozen=True)
class SweepReport:
    """Outcome of one theorem sweep over all small connected graphs."""

    theorem_id: str
    n_min: int
    n_max: int
    graphs_checked: int
    counts_by_n: dict[int, int]
    failures: tuple[tuple[str, str], ...]  # (canonical graph6, detail)
    solver_budget_exhaustions: int
    elapsed_ms: float
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and self.solver_budget_exhaustions == 0

    def to_json(self, include_timing: bool = False) -> str:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "theorem_id": self.theorem_id,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "graphs_checked": self.graphs_checked,
            "counts_by_n": {str(k): v for k, v in self.counts_by_n.items()},
            "failures": [{"graph6": g, "detail": d} for g, d in self.failures],
            "solver_budget_exhaustions": self.solver_budget_exhaustions,
            "data": self.data,
        }
        if include_timing:
            payload["elapsed_ms"] = self.elapsed_ms
        return json.dumps(payload, sort_keys=True)

    def summary_line(self) -> str:
        verdict = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return (
            f"{self.theorem_id}: {self.graphs_checked} graphs, "
            f"n={self.n_min}..{self.n_max}, {verdict}"
        )


def sweep(
    theorem_id: str,
    n_max: int,
    threads: int = 1,
    budget: Optional[int] = None,
    allow_large: bool = False,
) -> SweepReport:
    """Run one registered theorem check over every connected graph with
    SWEEP_N_MIN <= n <= n_max.  Failures carry the canonical graph6 string
    and a detail line, sorted for run-to-run and thread-count determinism."""
    if theorem_id not in THEOREM_CHECKS:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {sorted(THEOREM_CHECKS)}")
    limit = ENUMERATION_HARD_LIMIT if allow_large else ENUMERATION_LIMIT
    if n_max > limit:
        raise SizeLimitError(f"sweep range n_max={n_max} exceeds enumeration limit {limit}")
    started = time.perf_counter()
    counts: dict[int, int] = {}
    g6_list: list[str] = []
    for n in range(SWEEP_N_MIN, n_max + 1):
        classes = _connected_classes(n)
        counts[n] = len(classes)
        g6_list.extend(classes)

    explore = theorem_id == "clique-vs-edim-explore"
    check = THEOREM_CHECKS[theorem_id]

    def run_one(g6: str):
        st = _stats(g6, budget)
        if st.budget_exhausted:
            return g6, "budget-exhausted", st
        if explore:
            return g6, None, st
        return g6, check(graph6_decode(g6), st), st

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_one, g6_list))
    else:
        results = [run_one(g6) for g6 in g6_list]

    failures = []
    exhaustions = 0
    clique_by_edim: dict[int, int] = {}
    for g6, detail, st in results:
        if detail == "budget-exhausted":
            exhaustions += 1
        elif detail is not None:
            failures.append((g6, detail))
        if explore and not st.budget_exhausted:
            prev = clique_by_edim.get(st.edim_nonempty, 0)
            clique_by_edim[st.edim_nonempty] = max(prev, st.max_clique_size)

    data = {}
    if explore:
        data["max_clique_by_edim"] = {str(k): v for k, v in sorted(clique_by_edim.items())}
    return SweepReport(
        theorem_id=theorem_id,
        n_min=SWEEP_N_MIN,
        n_max=n_max,
        graphs_checked=len(g6_list),
        counts_by_n=counts,
        failures=tuple(sorted(failures)),
        solver_budget_exhaustions=exhaustions,
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
        data=data,
    )
