"""Executable mirror of the pair-classification and elimination pipeline used
to bound hyperedge counts by clique counts of F-free graphs.

Pairs covered by few hyperedges are blue, heavily covered pairs red. A
representative subset of blue pairs joins the red pairs in an auxiliary graph
G; F-copies in G are either certified as Berge-F witnesses (saturating
matching) or eliminated by deleting a carefully chosen red edge from a Hall
violator, recoloring its red hyperedges green. The surviving graphs G1
(blue + purple) and G2 (green + purple) are both F-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, floor

from .berge import BergeWitness, contains_berge
from .core import Hypergraph, Multigraph, count_cliques, two_uniform
from .matching import hall_violator, max_matching

Pair = tuple[int, int]


@dataclass(frozen=True)
class PairColoring:
    r: int
    blue_threshold: int  # C(r,2) - 2
    pair_class: dict[Pair, str]  # blue | red for covered pairs
    hyperedge_class: tuple[str, ...]  # blue | red per hyperedge

    @property
    def blue_pairs(self) -> list[Pair]:
        return sorted(p for p, c in self.pair_class.items() if c == "blue")

    @property
    def red_pairs(self) -> list[Pair]:
        return sorted(p for p, c in self.pair_class.items() if c == "red")


def classify_pairs(h: Hypergraph) -> PairColoring:
    """Blue pairs lie in 1..C(r,2)-2 hyperedges, red pairs in more; a
    hyperedge is blue iff it contains a blue pair. Requires r >= 3 (for r = 2
    the blue band is empty)."""
    if h.r < 3:
        raise ValueError("pair classification needs uniformity r >= 3")
    threshold = comb(h.r, 2) - 2
    pair_class: dict[Pair, str] = {}
    for p, mult in h._pair_mult.items():
        pair_class[p] = "blue" if mult <= threshold else "red"
    hyper = []
    for e in h.edges:
        blue = any(pair_class[p] == "blue" for p in combinations(e, 2))
        hyper.append("blue" if blue else "red")
    return PairColoring(h.r, threshold, pair_class, tuple(hyper))


@dataclass(frozen=True)
class SelectionReport:
    s_prime: tuple[Pair, ...]
    blue_pair_count: int
    achieved_ratio: Fraction | None
    claimed_ratio: Fraction
    below_claimed: bool


def select_blue_representatives(h: Hypergraph, coloring: PairColoring) -> SelectionReport:
    """Greedy subset of blue pairs with at most one representative per blue
    hyperedge, in canonical pair order. The achieved |S'|/|S| ratio is
    reported and flagged when it falls below the claimed 1/(C(r,2)-2); the
    claim fails already for r = 3, so this is informational, not an error."""
    used = [False] * len(h.edges)
    s_prime: list[Pair] = []
    blue = coloring.blue_pairs
    for p in blue:
        hits = h.edges_containing_pair(*p)
        if any(used[i] for i in hits):
            continue
        s_prime.append(p)
        for i in hits:
            used[i] = True
    claimed = Fraction(1, max(coloring.blue_threshold, 1))
    achieved = Fraction(len(s_prime), len(blue)) if blue else None
    below = achieved is not None and achieved < claimed
    return SelectionReport(tuple(s_prime), len(blue), achieved, claimed, below)


def find_bad_set(b1, b2, adjacency) -> tuple[list, list] | None:
    """Hall violator among B1 against B2, or None when a B1-saturating
    matching exists.

    adjacency[i] lists indices into b2 reachable from b1[i]. Returns
    (X, N(X)) as sublists of b1 and b2 with |N(X)| < |X|, extracted from the
    alternating-path forest of a maximum matching.
    """
    size, match_left, match_right = max_matching(len(b1), adjacency)
    if size == len(b1):
        return None
    x_idx, nx_idx = hall_violator(len(b1), adjacency, match_left, match_right)
    return [b1[i] for i in x_idx], [b2[j] for j in nx_idx]


@dataclass
class IterationTrace:
    copy_pairs: tuple[Pair, ...]
    copy_has_blue: bool
    bad_set: tuple[Pair, ...] | None
    deleted: Pair | None
    red_incidence_at_deletion: int | None
    recolored_green: tuple[int, ...] = ()


@dataclass
class EngineReport:
    status: str  # "clean" | "berge_found" | "no_copy"
    witness: BergeWitness | None
    selection: SelectionReport
    g: Multigraph  # initial auxiliary graph (red pairs + S')
    g1: Multigraph  # blue + purple
    g2: Multigraph  # green + purple
    deleted: tuple[Pair, ...]
    green_pair_incidence: dict[Pair, int]
    blue_hyperedges: int
    green_hyperedges: int
    purple_hyperedges: int
    x: int  # purple pair count
    iterations: int
    trace: list[IterationTrace] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)


def eliminate(h: Hypergraph, f: Multigraph) -> EngineReport:
    """Run the full pipeline. Stops with status "berge_found" and a verified
    witness when an F-copy admits a saturating matching into distinct
    hyperedges; otherwise deletes red edges from bad sets until G is F-free.

    Requires r >= 3 and F free of r-cliques (the argument breaks down
    otherwise and no constants are available)."""
    if h.r < 3:
        raise ValueError("the elimination pipeline needs uniformity r >= 3")
    f_simple = f.simplified()
    if count_cliques(f_simple, h.r).count > 0:
        raise ValueError(f"pattern contains a K_{h.r}; rejected")

    coloring = classify_pairs(h)
    selection = select_blue_representatives(h, coloring)
    threshold = coloring.blue_threshold

    blue_set = set(selection.s_prime)
    red_set = set(coloring.red_pairs)
    g0 = Multigraph(h.n, sorted(blue_set | red_set))

    hyper_class = list(coloring.hyperedge_class)
    current = set(g0.edges)
    deleted: list[Pair] = []
    green_incidence: dict[Pair, int] = {}
    trace: list[IterationTrace] = []
    violations: list[str] = []
    witness: BergeWitness | None = None
    status = "clean"
    cap = len(g0.edges)
    iterations = 0

    while True:
        gcur = Multigraph(h.n, sorted(current))
        copy = contains_berge(two_uniform(gcur), f)
        if copy is None:
            break
        if iterations >= cap:
            raise RuntimeError("elimination exceeded its deletion cap; internal error")
        iterations += 1

        cur_edges = gcur.edges
        copy_pairs = tuple(cur_edges[j] for j in copy.edge_map)
        has_blue = any(p in blue_set for p in copy_pairs)

        b1 = list(copy_pairs)
        b2: list[int] = sorted({i for p in b1 for i in h.edges_containing_pair(*p)})
        b2_pos = {hi: k for k, hi in enumerate(b2)}
        adjacency = [[b2_pos[i] for i in h.edges_containing_pair(*p)] for p in b1]

        bad = find_bad_set(b1, b2, adjacency)
        if bad is None:
            size, match_left, _ = max_matching(len(b1), adjacency)
            assert size == len(b1)
            witness = BergeWitness(copy.core_map,
                                   tuple(b2[match_left[j]] for j in range(len(b1))))
            if not witness.is_valid_for(h, f):
                violations.append("saturating matching produced an invalid witness")
            status = "berge_found"
            trace.append(IterationTrace(copy_pairs, has_blue, None, None, None))
            break

        x_pairs, _ = bad
        if not has_blue:
            violations.append(
                f"copy {copy_pairs} in the deletion branch has no blue edge")
        candidates = []
        for p in x_pairs:
            if p not in red_set:
                continue
            cnt = sum(1 for i in h.edges_containing_pair(*p) if hyper_class[i] == "red")
            if cnt <= threshold:
                candidates.append((cnt, p))
        if not candidates:
            violations.append(
                f"bad set {x_pairs} has no red edge in <= {threshold} red hyperedges")
            status = "stuck"
            trace.append(IterationTrace(copy_pairs, has_blue, tuple(x_pairs), None, None))
            break
        candidates.sort()
        cnt, victim = candidates[0]
        current.discard(victim)
        deleted.append(victim)
        green_incidence[victim] = cnt
        recolored = []
        for i in h.edges_containing_pair(*victim):
            if hyper_class[i] == "red":
                hyper_class[i] = "green"
                recolored.append(i)
        trace.append(IterationTrace(copy_pairs, has_blue, tuple(x_pairs), victim,
                                    cnt, tuple(recolored)))

    purple_pairs = sorted((red_set & current))
    g1 = Multigraph(h.n, sorted(current))  # blue + purple = final G
    g2 = Multigraph(h.n, sorted(set(deleted) | set(purple_pairs)))  # green + purple
    counts = {"blue": 0, "green": 0, "red": 0}
    for c in hyper_class:
        counts[c] += 1

    return EngineReport(
        status=status,
        witness=witness,
        selection=selection,
        g=g0,
        g1=g1,
        g2=g2,
        deleted=tuple(deleted),
        green_pair_incidence=green_incidence,
        blue_hyperedges=counts["blue"],
        green_hyperedges=counts["green"],
        purple_hyperedges=counts["red"],  # surviving reds are the purples
        x=len(purple_pairs),
        iterations=iterations,
        trace=trace,
        violations=violations,
    )


@dataclass(frozen=True)
class CliqueBoundReport:
    clique_count: int
    bound_first: Fraction
    bound_second: Fraction
    bound: int
    holds: bool


def clique_bound_check(g: Multigraph, c: Fraction, i: int, ex_value: int,
                       r: int) -> CliqueBoundReport:
    """Check the two clique-count bounds for an F-free graph with x edges:
    N(K_r) <= min{2cxn^(i-1)/r, cx(r-1)(2 ex_value / n)^(i-1)}, evaluated in
    exact rational arithmetic with a final floor.

    The caller asserts the hypotheses (G is F-free, ex(n,F) <= ex_value, and
    neighborhoods obey the c*d^i clique bound); this routine just evaluates.
    """
    c = Fraction(c)
    n = g.n
    x = len(g.edges)
    if n == 0:
        return CliqueBoundReport(0, Fraction(0), Fraction(0), 0, True)
    count = count_cliques(g, r).count
    first = 2 * c * x * Fraction(n) ** (i - 1) / r
    second = c * x * (r - 1) * (Fraction(2 * ex_value, n)) ** (i - 1)
    bound = floor(min(first, second))
    return CliqueBoundReport(count, first, second, bound, count <= bound)
