"""Hyperedge-to-pair decomposition mirroring the clique/edge counting argument
that sandwiches the hypergraph Turán number between generalized graph Turán
numbers.

Each hyperedge, processed in a given order, colors one of its uncolored pairs
blue; a hyperedge all of whose pairs are already blue becomes a blue
hyperedge. The blue pairs form a graph that inherits F-freeness from the
hypergraph, and blue hyperedges are dominated by the clique count of that
graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from random import Random

from .berge import BergeWitness, contains_berge, is_berge_free
from .core import Hypergraph, Multigraph, count_cliques, two_uniform


@dataclass(frozen=True)
class Gp2Decomposition:
    blue_graph: Multigraph
    blue_hyperedges: frozenset[int]
    # pick[i] is the pair colored by hyperedge i, or None when i is blue
    pick: tuple[tuple[int, int] | None, ...]
    order: tuple[int, ...]

    def counting_identity_holds(self, h: Hypergraph) -> bool:
        return len(h.edges) == len(self.blue_graph.edges) + len(self.blue_hyperedges)


def gp2_decompose(h: Hypergraph, order=None, pair_rule: str = "lex",
                  rng: Random | None = None) -> Gp2Decomposition:
    """Run the coloring procedure over the hyperedges in the given order.

    order defaults to canonical edge order; pair_rule is "lex" (default,
    deterministic) or "random" with an rng supplied, matching the paper-style
    arbitrary pick for property tests.
    """
    m = len(h.edges)
    if order is None:
        order = tuple(range(m))
    else:
        order = tuple(order)
        if sorted(order) != list(range(m)):
            raise ValueError("order must be a permutation of the edge indices")
    if pair_rule == "random" and rng is None:
        raise ValueError("pair_rule='random' requires an rng")

    colored: set[tuple[int, int]] = set()
    pick: list[tuple[int, int] | None] = [None] * m
    blue_hyperedges = set()
    for i in order:
        pairs = [p for p in combinations(h.edges[i], 2) if p not in colored]
        if not pairs:
            blue_hyperedges.add(i)
            continue
        chosen = pairs[0] if pair_rule == "lex" else rng.choice(pairs)
        pick[i] = chosen
        colored.add(chosen)

    blue_graph = Multigraph(h.n, sorted(colored))
    return Gp2Decomposition(blue_graph, frozenset(blue_hyperedges), tuple(pick), order)


@dataclass(frozen=True)
class Gp2Report:
    counting_identity_ok: bool
    clique_bound_ok: bool
    blue_hyperedge_count: int
    clique_count: int
    host_berge_free: bool
    blue_graph_f_free: bool | None
    # populated only if the blue graph contains F while the host is
    # Berge-F-free: that F-copy lifts to a Berge witness certifying the bug
    lifted_witness: BergeWitness | None

    @property
    def all_ok(self) -> bool:
        return (self.counting_identity_ok and self.clique_bound_ok
                and self.lifted_witness is None)


def gp2_certify(h: Hypergraph, f: Multigraph, d: Gp2Decomposition) -> Gp2Report:
    """Check the three facts the decomposition is supposed to guarantee:
    the counting identity, the clique bound on blue hyperedges, and (when the
    host is Berge-F-free) F-freeness of the blue graph."""
    _validate(h, d)

    identity_ok = d.counting_identity_holds(h)
    cliques = count_cliques(d.blue_graph, h.r).count
    clique_ok = len(d.blue_hyperedges) <= cliques

    host_free = is_berge_free(h, [f])
    blue_f_free: bool | None = None
    lifted: BergeWitness | None = None
    if host_free:
        copy = contains_berge(two_uniform(d.blue_graph), f)
        blue_f_free = copy is None
        if copy is not None:
            lifted = _lift(d, copy)
            assert lifted.is_valid_for(h, f), "lifted witness failed re-verification"

    return Gp2Report(
        counting_identity_ok=identity_ok,
        clique_bound_ok=clique_ok,
        blue_hyperedge_count=len(d.blue_hyperedges),
        clique_count=cliques,
        host_berge_free=host_free,
        blue_graph_f_free=blue_f_free,
        lifted_witness=lifted,
    )


def _validate(h: Hypergraph, d: Gp2Decomposition) -> None:
    if len(d.pick) != len(h.edges):
        raise ValueError("decomposition does not match the hypergraph edge count")
    blue_pairs = set(d.blue_graph.edges)
    for i, p in enumerate(d.pick):
        if p is None:
            if i not in d.blue_hyperedges:
                raise ValueError(f"hyperedge {i} has no pick and is not blue")
        elif not set(p) <= set(h.edges[i]):
            raise ValueError(f"hyperedge {i} picked pair {p} it does not contain")
    for i in d.blue_hyperedges:
        for p in combinations(h.edges[i], 2):
            if p not in blue_pairs:
                raise ValueError(f"blue hyperedge {i} contains uncolored pair {p}")


def _lift(d: Gp2Decomposition, copy: BergeWitness) -> BergeWitness:
    """Turn an F-copy in the blue graph into a Berge-F witness in the host,
    mapping each blue pair of the copy to the hyperedge that colored it."""
    colored_by = {p: i for i, p in enumerate(d.pick) if p is not None}
    blue_edges = d.blue_graph.edges
    return BergeWitness(copy.core_map,
                        tuple(colored_by[blue_edges[j]] for j in copy.edge_map))
