"""Basic graph and hypergraph types with incidence queries and clique counting.

Vertices are dense integers ``0..n-1``. Hyperedges are stored both as sorted
vertex tuples (canonical, lexicographic order) and as n-bit integer masks so
that intersection tests are O(1). All objects are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Hypergraph:
    """An r-uniform simple hypergraph on labeled vertices 0..n-1.

    Edges are duplicate-free r-element vertex sets. Isolated vertices are
    legal; ``n`` is always explicit and never inferred from the edges.
    """

    def __init__(self, n: int, r: int, edges):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if r < 2:
            raise ValueError("uniformity r must be >= 2")
        canon = []
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != r or len(set(t)) != r:
                raise ValueError(f"edge {t} does not have exactly {r} distinct vertices")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"edge {t} has a vertex outside 0..{n - 1}")
            canon.append(t)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate hyperedge {a}")
        self.n = n
        self.r = r
        self.edges: tuple[tuple[int, ...], ...] = tuple(canon)
        self.masks: tuple[int, ...] = tuple(_mask(e) for e in canon)

    @classmethod
    def _unsafe(cls, n: int, r: int, sorted_edges: tuple) -> "Hypergraph":
        """Construct without validation; caller guarantees canonical input."""
        h = cls.__new__(cls)
        h.n = n
        h.r = r
        h.edges = sorted_edges
        h.masks = tuple(_mask(e) for e in sorted_edges)
        return h

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self.r == other.r
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, m={len(self.edges)})"

    @cached_property
    def _pair_mult(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = {}
        for e in self.edges:
            for p in combinations(e, 2):
                mult[p] = mult.get(p, 0) + 1
        return mult

    @cached_property
    def _vertex_edges(self) -> tuple[tuple[int, ...], ...]:
        inc = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _pair_edges(self) -> dict[tuple[int, int], tuple[int, ...]]:
        by_pair: dict[tuple[int, int], list[int]] = {}
        for i, e in enumerate(self.edges):
            for p in combinations(e, 2):
                by_pair.setdefault(p, []).append(i)
        return {p: tuple(v) for p, v in by_pair.items()}

    def partner_mask(self, v: int, k: int = 1) -> int:
        """Bitmask of vertices u with pair_multiplicity(v, u) >= k."""
        masks = self._partner_masks
        if k <= 2:
            return masks[k - 1][v]
        m = 0
        for (a, b), c in self._pair_mult.items():
            if c >= k:
                if a == v:
                    m |= 1 << b
                elif b == v:
                    m |= 1 << a
        return m

    @cached_property
    def _partner_masks(self) -> tuple[list[int], list[int]]:
        ge1 = [0] * self.n
        ge2 = [0] * self.n
        for (a, b), c in self._pair_mult.items():
            ge1[a] |= 1 << b
            ge1[b] |= 1 << a
            if c >= 2:
                ge2[a] |= 1 << b
                ge2[b] |= 1 << a
        return ge1, ge2

    def edges_containing_pair(self, u: int, v: int) -> tuple[int, ...]:
        if u == v:
            raise ValueError("pair endpoints must differ")
        return self._pair_edges.get((min(u, v), max(u, v)), ())


class Multigraph:
    """A graph with parallel edges permitted (so the two-parallel-edge pattern
    is expressible). Edges are unordered vertex pairs kept in canonical sorted
    order, repeated entries encoding multiplicity."""

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = []
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if min(u, v) < 0 or max(u, v) >= n:
                raise ValueError(f"edge {tuple(e)} has a vertex outside 0..{n - 1}")
            canon.append((min(u, v), max(u, v)))
        canon.sort()
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={len(self.edges)})"

    @cached_property
    def edge_multiplicity(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = {}
        for e in self.edges:
            mult[e] = mult.get(e, 0) + 1
        return mult

    @cached_property
    def has_parallel_edges(self) -> bool:
        return any(c > 1 for c in self.edge_multiplicity.values())

    @cached_property
    def simple_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edge_multiplicity))

    def simplified(self) -> "Multigraph":
        """Copy with parallel edges collapsed to multiplicity one."""
        return Multigraph(self.n, self.simple_pairs)

    def degree(self, v: int) -> int:
        """Degree counting multiplicity."""
        return sum(1 for e in self.edges for x in e if x == v)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.simple_pairs:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(u for u in range(self.n) if self.adjacency_masks[v] >> u & 1)


@dataclass(frozen=True)
class CliqueCount:
    r: int
    count: int


def degree(h: Hypergraph, v: int) -> int:
    """Number of hyperedges containing v."""
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} outside 0..{h.n - 1}")
    return len(h._vertex_edges[v])


def pair_multiplicity(h: Hypergraph, u: int, v: int) -> int:
    """Number of hyperedges containing both u and v."""
    if u == v:
        raise ValueError("pair endpoints must differ")
    return h._pair_mult.get((min(u, v), max(u, v)), 0)


def is_linear(h: Hypergraph) -> bool:
    """True iff any two distinct hyperedges share at most one vertex."""
    return all(c <= 1 for c in h._pair_mult.values())


def count_cliques(g: Multigraph, r: int) -> CliqueCount:
    """Exact number of r-vertex complete subgraphs, by vertex-ordered
    enumeration over higher-numbered neighbor masks.

    Parallel edges are rejected: clique counting is a simple-graph notion.
    """
    if r < 1:
        raise ValueError("clique size r must be >= 1")
    if g.has_parallel_edges:
        raise ValueError("clique counting requires a graph without parallel edges")
    if r == 1:
        return CliqueCount(1, g.n)
    higher = [g.adjacency_masks[v] >> (v + 1) << (v + 1) for v in range(g.n)]

    def extend(cand: int, picked: int) -> int:
        if picked == r:
            return 1
        total = 0
        rem = cand
        while rem:
            low = rem & -rem
            v = low.bit_length() - 1
            rem ^= low
            total += extend(cand & higher[v], picked + 1)
        return total

    total = 0
    for v in range(g.n):
        total += extend(higher[v], 1)
    return CliqueCount(r, total)


def naive_count_cliques(g: Multigraph, r: int) -> int:
    """All-subsets oracle for count_cliques; intended for small n only."""
    if g.has_parallel_edges:
        raise ValueError("clique counting requires a graph without parallel edges")
    if r == 1:
        return g.n
    adj = g.adjacency_masks
    total = 0
    for sub in combinations(range(g.n), r):
        if all(adj[a] >> b & 1 for a, b in combinations(sub, 2)):
            total += 1
    return total


def list_triangles(g: Multigraph) -> list[tuple[int, int, int]]:
    """All triangles of g, each exactly once, in lexicographic order."""
    if g.has_parallel_edges:
        raise ValueError("triangle listing requires a graph without parallel edges")
    adj = g.adjacency_masks
    out = []
    for a in range(g.n):
        higher_a = adj[a] >> (a + 1) << (a + 1)
        rem_b = higher_a
        while rem_b:
            low = rem_b & -rem_b
            b = low.bit_length() - 1
            rem_b ^= low
            common = higher_a & adj[b]
            common &= ~((1 << (b + 1)) - 1)
            rem_c = common
            while rem_c:
                lc = rem_c & -rem_c
                c = lc.bit_length() - 1
                rem_c ^= lc
                out.append((a, b, c))
    out.sort()
    return out


def two_uniform(g: Multigraph) -> Hypergraph:
    """View a simple graph as a 2-uniform hypergraph (Berge containment in a
    2-uniform hypergraph is ordinary subgraph containment)."""
    if g.has_parallel_edges:
        raise ValueError("only simple graphs can be viewed as 2-uniform hypergraphs")
    return Hypergraph(g.n, 2, g.simple_pairs)


# Small pattern factories used throughout the test and construction suites.

def complete_graph(k: int) -> Multigraph:
    return Multigraph(k, list(combinations(range(k), 2)))


def complete_bipartite(s: int, t: int) -> Multigraph:
    return Multigraph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def path_graph(k: int) -> Multigraph:
    """Path on k vertices (k - 1 edges)."""
    return Multigraph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Multigraph:
    """Cycle on k vertices; k = 2 yields the two-parallel-edge multigraph."""
    if k < 2:
        raise ValueError("cycle length must be >= 2")
    if k == 2:
        return Multigraph(2, [(0, 1), (0, 1)])
    return Multigraph(k, [(i, (i + 1) % k) for i in range(k)])
