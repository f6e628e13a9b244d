"""Exact small-instance Turán numbers by branch and bound.

Both searches branch over candidate edges in canonical order with an
include/skip decision, prune by a best-so-far bound, break the root symmetry
(a nonempty extremal object can be relabeled so its lexicographically least
edge is the least candidate), and keep the incremental freeness check sound
by monotonicity: a forbidden configuration appears exactly when its last edge
is added, so testing only witnesses through the newly added edge is exact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .berge import contains_berge
from .core import Hypergraph, Multigraph, count_cliques, two_uniform


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10 ** 8
    max_seconds: float = 600.0


@dataclass
class SearchResult:
    value: int
    witness: Hypergraph | Multigraph
    status: str  # "exact" | "lower_bound_only"
    nodes_explored: int
    wall_time: float


class _BudgetExceeded(Exception):
    pass


class _Searcher:
    def __init__(self, budget: Budget):
        self.budget = budget or Budget()
        self.nodes = 0
        self.start = time.monotonic()
        self.best_value = 0
        self.best_edges: tuple = ()

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _BudgetExceeded
        if self.nodes % 1024 == 0 and time.monotonic() - self.start > self.budget.max_seconds:
            raise _BudgetExceeded


def exact_ex_r(n: int, r: int, family, budget: Budget | None = None) -> SearchResult:
    """Maximum edge count of a Berge-family-free r-uniform hypergraph on n
    labeled vertices, with the witness achieving it."""
    if n < 0 or r < 2:
        raise ValueError("need n >= 0 and r >= 2")
    family = list(family)
    state = _Searcher(budget or Budget())
    candidates = list(combinations(range(n), r))
    status = "exact"

    def admissible(chosen: list, cand) -> bool:
        trial = Hypergraph._unsafe(n, r, tuple(sorted(chosen + [cand])))
        new_index = trial.edges.index(cand)
        return all(contains_berge(trial, f, require_edge=new_index) is None
                   for f in family)

    def dfs(idx: int, chosen: list) -> None:
        state.tick()
        remaining = len(candidates) - idx
        if len(chosen) + remaining <= state.best_value:
            return
        if idx == len(candidates):
            if len(chosen) > state.best_value:
                state.best_value = len(chosen)
                state.best_edges = tuple(chosen)
            return
        cand = candidates[idx]
        if admissible(chosen, cand):
            chosen.append(cand)
            dfs(idx + 1, chosen)
            chosen.pop()
        dfs(idx + 1, chosen)

    try:
        if candidates and admissible([], candidates[0]):
            # root symmetry: a nonempty extremal hypergraph can be relabeled so
            # its lex-least edge is the overall least r-set
            state.best_value = 1
            state.best_edges = (candidates[0],)
            dfs(1, [candidates[0]])
        # else the empty hypergraph (value 0) is optimal
    except _BudgetExceeded:
        status = "lower_bound_only"

    witness = Hypergraph(n, r, state.best_edges)
    return SearchResult(state.best_value, witness, status, state.nodes,
                        time.monotonic() - state.start)


def naive_ex_r(n: int, r: int, family) -> tuple[int, Hypergraph]:
    """No-pruning oracle: enumerate every subset of r-sets. Tiny n only."""
    from .berge import is_berge_free
    candidates = list(combinations(range(n), r))
    best, best_edges = 0, ()
    for size in range(len(candidates), 0, -1):
        if size <= best:
            break
        for sub in combinations(candidates, size):
            h = Hypergraph(n, r, sub)
            if is_berge_free(h, family):
                best, best_edges = size, sub
                break
        if best:
            break
    return best, Hypergraph(n, r, best_edges)


def exact_graph_ex(n: int, r: int, f: Multigraph, budget: Budget | None = None) -> SearchResult:
    """Maximum number of r-cliques over F-free graphs on n labeled vertices.

    The optimistic completion (current graph plus all undecided pairs) gives
    a monotone upper bound for pruning.
    """
    if n < 0 or r < 2:
        raise ValueError("need n >= 0 and r >= 2")
    state = _Searcher(budget or Budget())
    candidates = list(combinations(range(n), 2))
    total = len(candidates)
    status = "exact"

    def f_appears(chosen: list, cand) -> bool:
        trial = Hypergraph._unsafe(n, 2, tuple(sorted(chosen + [cand])))
        new_index = trial.edges.index(cand)
        return contains_berge(trial, f, require_edge=new_index) is not None

    def clique_value(edge_list) -> int:
        return count_cliques(Multigraph(n, edge_list), r).count

    def dfs(idx: int, chosen: list) -> None:
        state.tick()
        optimistic = clique_value(chosen + candidates[idx:])
        if optimistic <= state.best_value:
            return
        if idx == total:
            value = clique_value(chosen)
            if value > state.best_value:
                state.best_value = value
                state.best_edges = tuple(chosen)
            return
        cand = candidates[idx]
        if not f_appears(chosen, cand):
            chosen.append(cand)
            dfs(idx + 1, chosen)
            chosen.pop()
        dfs(idx + 1, chosen)

    try:
        state.best_value = 0
        state.best_edges = ()
        if candidates and not f_appears([], candidates[0]):
            # root symmetry: nonempty extremal graphs may be assumed to
            # contain the least pair
            dfs(1, [candidates[0]])
    except _BudgetExceeded:
        status = "lower_bound_only"

    witness = Multigraph(n, state.best_edges)
    return SearchResult(state.best_value, witness, status, state.nodes,
                        time.monotonic() - state.start)


@dataclass
class SandwichReport:
    n: int
    r: int
    clique_ex: SearchResult  # max r-clique count over F-free graphs
    hyper_ex: SearchResult   # Berge Turán number
    graph_ex: SearchResult   # classical ex(n, F)
    lower_ok: bool
    upper_ok: bool
    conclusive: bool

    @property
    def ok(self) -> bool:
        return self.conclusive and self.lower_ok and self.upper_ok


def sandwich_check(n: int, r: int, f: Multigraph,
                   budget: Budget | None = None) -> SandwichReport:
    """Exact verification of ex(n,K_r,F) <= ex_r(n,F) <= ex(n,K_r,F) + ex(n,F).

    F must be simple here (the clique side is a simple-graph quantity), which
    rules out the two-parallel-edge pattern by design.
    """
    if f.has_parallel_edges:
        raise ValueError("sandwich comparison is defined for simple patterns only")
    a = exact_graph_ex(n, r, f, budget)
    b = exact_ex_r(n, r, [f], budget)
    c = exact_graph_ex(n, 2, f, budget)
    conclusive = all(x.status == "exact" for x in (a, b, c))
    return SandwichReport(
        n=n, r=r, clique_ex=a, hyper_ex=b, graph_ex=c,
        lower_ok=a.value <= b.value,
        upper_ok=b.value <= a.value + c.value,
        conclusive=conclusive,
    )
