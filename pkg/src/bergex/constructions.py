"""Lower-bound witnesses: the algebraic K_{2,t}-free graphs, triangle
replacement, bipartite blow-ups, and the two linear-hypergraph constructions
(independent set over the triangle-conflict graph, and matching in the padded
dual of the triangle-incidence hypergraph).

Freeness of every output is certified by the detector at desk scale rather
than trusted from the algebra; see ConstructionCertificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .berge import is_berge_free
from .core import Hypergraph, Multigraph, list_triangles
from .gf import GF, prime_power


# ---------------------------------------------------------------------------
# K_{2,t}-free orbit graph over GF(q)

@dataclass(frozen=True)
class FurediParams:
    """Parameters of the orbit construction: odd prime power q and t >= 2
    with (t-1) | (q-1); the order-(t-1) multiplicative subgroup is fixed."""

    q: int
    t: int
    subgroup: tuple[int, ...]

    @classmethod
    def create(cls, q: int, t: int) -> "FurediParams":
        pk = prime_power(q)
        if pk is None:
            raise ValueError(f"{q} is not a prime power")
        if pk[0] == 2:
            raise ValueError(f"{q} is even; an odd prime power is required")
        if t < 2:
            raise ValueError("t must be >= 2")
        if (q - 1) % (t - 1):
            raise ValueError(f"(t-1)={t - 1} does not divide q-1={q - 1}")
        sub = GF(q).subgroup(t - 1)
        return cls(q, t, sub)


def furedi_k2t(params: FurediParams) -> Multigraph:
    """The K_{2,t}-free graph on the (q^2-1)/(t-1) orbit classes of nonzero
    field pairs under the order-(t-1) subgroup, classes <a,b> and <x,y>
    adjacent when a*x + b*y lands in the subgroup. Self-adjacent classes keep
    their vertex but the loop is discarded, so a few vertices fall one short
    of the generic degree q; the resulting edge deficit against the ideal
    q*n/2 is what furedi_stats reports as epsilon.
    """
    field = GF(params.q)
    sub = set(params.subgroup)

    def rep(a: int, b: int) -> tuple[int, int]:
        return min((field.mul(h, a), field.mul(h, b)) for h in params.subgroup)

    seen = set()
    reps = []
    for a in range(params.q):
        for b in range(params.q):
            if (a, b) == (0, 0):
                continue
            r = rep(a, b)
            if r not in seen:
                seen.add(r)
                reps.append(r)
    reps.sort()
    index = {r: i for i, r in enumerate(reps)}
    n = len(reps)
    assert n == (params.q ** 2 - 1) // (params.t - 1)

    def adjacent(p1, p2) -> bool:
        return field.add(field.mul(p1[0], p2[0]), field.mul(p1[1], p2[1])) in sub

    edges = []
    for i, p1 in enumerate(reps):
        for j in range(i + 1, n):
            if adjacent(p1, reps[j]):
                edges.append((i, j))
    return Multigraph(n, edges)


def furedi_stats(g: Multigraph, params: FurediParams) -> dict:
    """Loop-class count, edge deficit epsilon against the ideal q*n/2, and the
    per-edge triangle distribution (the asymptotic picture puts almost every
    edge in exactly t-1 triangles; at desk scale this is measured, never
    assumed)."""
    field = GF(params.q)
    sub = set(params.subgroup)
    loop_classes = 0
    seen = set()
    for a in range(params.q):
        for b in range(params.q):
            if (a, b) == (0, 0):
                continue
            r = min((field.mul(h, a), field.mul(h, b)) for h in params.subgroup)
            if r in seen:
                continue
            seen.add(r)
            if field.add(field.mul(r[0], r[0]), field.mul(r[1], r[1])) in sub:
                loop_classes += 1
    ideal = params.q * g.n // 2
    adj = g.adjacency_masks
    histogram: dict[int, int] = {}
    for u, v in g.edges:
        c = (adj[u] & adj[v]).bit_count()
        histogram[c] = histogram.get(c, 0) + 1
    return {
        "vertices": g.n,
        "edges": len(g.edges),
        "ideal_edges": ideal,
        "loop_classes": loop_classes,
        "epsilon": Fraction(ideal - len(g.edges), ideal),
        "triangles_per_edge": dict(sorted(histogram.items())),
    }


# ---------------------------------------------------------------------------
# Classical fixtures

def fano_plane() -> Hypergraph:
    """The 7-point Steiner triple system: lines {i, i+1, i+3} mod 7."""
    return Hypergraph(7, 3, [(i % 7, (i + 1) % 7, (i + 3) % 7) for i in range(7)])


def fano_incidence_graph() -> Multigraph:
    """Point-line incidence graph of the 7-point plane: bipartite 7+7,
    21 edges, girth 6 (so K_{2,2}-free)."""
    lines = fano_plane().edges
    return Multigraph(14, [(p, 7 + i) for i, line in enumerate(lines) for p in line])


# ---------------------------------------------------------------------------
# Triangle replacement and blow-ups

def triangles_to_hyperedges(g: Multigraph) -> Hypergraph:
    """3-uniform hypergraph with one hyperedge per triangle of g. When g is
    K_{2,t}-free the result is Berge-K_{2,t}-free (replacing cliques of an
    F-free graph by hyperedges cannot create a Berge-F)."""
    return Hypergraph(g.n, 3, list_triangles(g))


def bipartition(g: Multigraph) -> tuple[list[int], list[int]]:
    """Two-color g by BFS, each component rooted at its least vertex with
    color 0. Raises on odd cycles."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    raise ValueError("graph is not bipartite")
    return ([v for v in range(g.n) if color[v] == 0],
            [v for v in range(g.n) if color[v] == 1])


def blowup_bipartite(g: Multigraph, r: int, t: int) -> Hypergraph:
    """Replace each vertex of one class by floor(r/2) clones and of the other
    by ceil(r/2) clones; every original edge becomes one r-set. Preserves the
    edge count exactly and is Berge-K_{2,t}-free whenever g is K_{2,t}-free
    and t > ceil(r/2) - 2."""
    if g.has_parallel_edges:
        raise ValueError("blow-up input must be a simple graph")
    if r < 2:
        raise ValueError("uniformity r must be >= 2")
    if not t > math.ceil(r / 2) - 2:
        raise ValueError(f"t={t} out of range: need t > ceil(r/2)-2 = {math.ceil(r / 2) - 2}")
    side_a, side_b = bipartition(g)
    if len(side_a) != len(side_b):
        raise ValueError(f"class sizes unequal: {len(side_a)} vs {len(side_b)}")
    return _blowup(g, side_a, side_b, r)


def _blowup(g: Multigraph, side_a, side_b, r: int) -> Hypergraph:
    in_a = set(side_a)
    sizes = [r // 2 if v in in_a else (r + 1) // 2 for v in range(g.n)]
    block = []
    nxt = 0
    for v in range(g.n):
        block.append(tuple(range(nxt, nxt + sizes[v])))
        nxt += sizes[v]
    edges = [block[u] + block[v] for u, v in g.edges]
    return Hypergraph(nxt, r, edges)


def girth(g: Multigraph) -> int | None:
    """Length of a shortest cycle, or None for a forest. Parallel edges form
    a cycle of length 2."""
    if g.has_parallel_edges:
        return 2
    best: int | None = None
    adj = [g.neighbors(v) for v in range(g.n)]
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def cycle_blowup(g: Multigraph, r: int, k: int) -> Hypergraph:
    """Blow up a bipartite graph of girth > 2k into an r-uniform hypergraph
    free of every Berge cycle of length 3..2k, one hyperedge per edge."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if r < 2:
        raise ValueError("uniformity r must be >= 2")
    got = girth(g)
    if got is not None and got <= 2 * k:
        raise ValueError(f"girth {got} <= 2k = {2 * k}")
    side_a, side_b = bipartition(g)
    return _blowup(g, side_a, side_b, r)


# ---------------------------------------------------------------------------
# Linear constructions

def _triangle_conflicts(triangles) -> list[int]:
    """Conflict masks: triangles sharing an edge (two common vertices)."""
    n = len(triangles)
    masks = [0] * n
    sets = [frozenset(t) for t in triangles]
    for i in range(n):
        for j in range(i + 1, n):
            if len(sets[i] & sets[j]) >= 2:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


@dataclass(frozen=True)
class IndependentSetReport:
    triangle_count: int
    conflict_max_degree: int
    selected: int
    greedy_floor: Fraction  # N / (observed max degree + 1)
    target: Fraction  # 2N / (4t - 6), from max degree <= 3t-6 and clique t-1
    below_target: bool


def linear_via_independent_set(g: Multigraph, t: int) -> tuple[Hypergraph, IndependentSetReport]:
    """Keep a large set of pairwise edge-disjoint triangles of g: min-degree
    greedy on the conflict graph followed by (1,2)-swap local search. The
    output is linear, and Berge-K_{2,t}-free whenever g is K_{2,t}-free.

    The 2N/(4t-6) independence target (max conflict degree 3t-6, clique
    number t-1) is reported; falling below it is flagged, not fatal."""
    triangles = list_triangles(g)
    n = len(triangles)
    masks = _triangle_conflicts(triangles)
    max_deg = max((m.bit_count() for m in masks), default=0)

    alive = (1 << n) - 1
    chosen: list[int] = []
    while alive:
        best_v, best_d = -1, None
        rem = alive
        while rem:
            low = rem & -rem
            v = low.bit_length() - 1
            rem ^= low
            d = (masks[v] & alive).bit_count()
            if best_d is None or d < best_d:
                best_v, best_d = v, d
        chosen.append(best_v)
        alive &= ~((1 << best_v) | masks[best_v])

    chosen_mask = 0
    for v in chosen:
        chosen_mask |= 1 << v
    chosen_mask = _two_swap(masks, n, chosen_mask)
    selected = [triangles[v] for v in range(n) if chosen_mask >> v & 1]

    count = len(selected)
    report = IndependentSetReport(
        triangle_count=n,
        conflict_max_degree=max_deg,
        selected=count,
        greedy_floor=Fraction(n, max_deg + 1) if n else Fraction(0),
        target=Fraction(2 * n, 4 * t - 6) if n else Fraction(0),
        below_target=n > 0 and Fraction(count) < Fraction(2 * n, 4 * t - 6),
    )
    return Hypergraph(g.n, 3, selected), report


def _two_swap(masks, n: int, chosen: int) -> int:
    """Augment, then repeatedly trade one member for two, until stable."""
    improved = True
    while improved:
        improved = False
        for v in range(n):
            if not chosen >> v & 1 and masks[v] & chosen == 0:
                chosen |= 1 << v
                improved = True
        for v in range(n):
            if not chosen >> v & 1:
                continue
            rest = chosen & ~(1 << v)
            free = [u for u in range(n)
                    if not chosen >> u & 1 and masks[u] & rest == 0 and u != v]
            done = False
            for i, u1 in enumerate(free):
                for u2 in free[i + 1:]:
                    if not masks[u1] >> u2 & 1:
                        chosen = rest | (1 << u1) | (1 << u2)
                        improved = True
                        done = True
                        break
                if done:
                    break
            if done:
                break
    return chosen


@dataclass(frozen=True)
class MatchingReport:
    triangle_count: int
    edge_vertices: int  # vertices of the dual (triangle-carrying edges of g)
    pad_vertices: int
    pad_hyperedges: int
    selected: int
    covered_fraction: Fraction
    coverage_target: float  # 1 - c0 * ln^(3/2)(t-1) / sqrt(t-1)


def linear_via_matching(g: Multigraph, t: int,
                        c0: float = 1.0) -> tuple[Hypergraph, MatchingReport]:
    """Strong independent set of triangles via a matching in the padded dual.

    The dual has one vertex per triangle-carrying edge of g and one 3-element
    hyperedge per triangle; padding with fresh vertices raises every original
    vertex degree to t-1 while preserving linearity. A greedy matching plus
    length-3 augmentation is computed, hyperedges touching the pad are
    dropped, and the surviving matched triangles are emitted. Coverage is
    measured against the probabilistic-matching target, never assumed."""
    if t < 2:
        raise ValueError("t must be >= 2")
    triangles = list_triangles(g)
    edge_tris: dict[tuple[int, int], list[int]] = {}
    for ti, (a, b, c) in enumerate(triangles):
        for p in ((a, b), (a, c), (b, c)):
            edge_tris.setdefault(p, []).append(ti)
    for p, ts in edge_tris.items():
        if len(ts) > t - 1:
            raise ValueError(f"edge {p} lies in {len(ts)} > t-1 triangles")

    dual_vertices = sorted(edge_tris)  # triangle-carrying edges of g
    vid = {p: i for i, p in enumerate(dual_vertices)}
    base = len(dual_vertices)
    hyperedges: list[tuple[int, ...]] = []
    for a, b, c in triangles:
        hyperedges.append(tuple(sorted((vid[(a, b)], vid[(a, c)], vid[(b, c)]))))
    n_tri_edges = len(hyperedges)

    # pad every deficient original vertex up to degree t-1 with hyperedges
    # carrying two fresh vertices each (so no two share more than one vertex)
    degree = [0] * base
    for e in hyperedges:
        for v in e:
            degree[v] += 1
    fresh_degree: list[int] = []
    used_pairs: set[tuple[int, int]] = set()
    for v in range(base):
        partners_of_v: set[int] = set()
        for _ in range(t - 1 - degree[v]):
            x, y = _fresh_pair(fresh_degree, used_pairs, partners_of_v, t)
            partners_of_v.update((x, y))
            hyperedges.append((v, base + x, base + y))

    conflicts = _hyperedge_conflicts(hyperedges, base + len(fresh_degree))
    matched = _greedy_matching(hyperedges, conflicts)
    matched = _augment_triples(hyperedges, conflicts, matched)

    keep = [i for i in sorted(matched) if i < n_tri_edges]
    selected = [triangles[i] for i in keep]
    covered = 3 * len(keep)
    target = 1.0 if t == 2 else 1.0 - c0 * math.log(t - 1) ** 1.5 / math.sqrt(t - 1)
    report = MatchingReport(
        triangle_count=len(triangles),
        edge_vertices=base,
        pad_vertices=len(fresh_degree),
        pad_hyperedges=len(hyperedges) - n_tri_edges,
        selected=len(keep),
        covered_fraction=Fraction(covered, base) if base else Fraction(0),
        coverage_target=target,
    )
    return Hypergraph(g.n, 3, selected), report


def _fresh_pair(fresh_degree: list[int], used_pairs, partners_of_v, t: int):
    """Two fresh vertices forming an unused pair, reusing low-degree ones."""
    avail = [i for i, d in enumerate(fresh_degree)
             if d < t - 1 and i not in partners_of_v]
    for i, x in enumerate(avail):
        for y in avail[i + 1:]:
            if (x, y) not in used_pairs:
                used_pairs.add((x, y))
                fresh_degree[x] += 1
                fresh_degree[y] += 1
                return x, y
    if len(avail) >= 1:
        x = avail[0]
        y = len(fresh_degree)
        fresh_degree.append(0)
        used_pairs.add((x, y))
        fresh_degree[x] += 1
        fresh_degree[y] += 1
        return x, y
    x = len(fresh_degree)
    fresh_degree.append(0)
    y = len(fresh_degree)
    fresh_degree.append(0)
    used_pairs.add((x, y))
    fresh_degree[x] += 1
    fresh_degree[y] += 1
    return x, y


def _hyperedge_conflicts(hyperedges, n_vertices: int) -> list[int]:
    by_vertex: list[list[int]] = [[] for _ in range(n_vertices)]
    for i, e in enumerate(hyperedges):
        for v in e:
            by_vertex[v].append(i)
    masks = [0] * len(hyperedges)
    for group in by_vertex:
        gm = 0
        for i in group:
            gm |= 1 << i
        for i in group:
            masks[i] |= gm & ~(1 << i)
    return masks


def _greedy_matching(hyperedges, conflicts) -> set[int]:
    order = sorted(range(len(hyperedges)),
                   key=lambda i: (conflicts[i].bit_count(), i))
    used_vertices: set[int] = set()
    matched: set[int] = set()
    for i in order:
        if used_vertices.isdisjoint(hyperedges[i]):
            matched.add(i)
            used_vertices.update(hyperedges[i])
    return matched


def _augment_triples(hyperedges, conflicts, matched: set[int]) -> set[int]:
    """Swap one matched hyperedge for two, while any such trade exists."""
    m = len(hyperedges)
    improved = True
    passes = 0
    while improved and passes <= m:
        passes += 1
        improved = False
        matched_mask = 0
        for i in matched:
            matched_mask |= 1 << i
        for i in range(m):
            if not matched_mask >> i & 1 and conflicts[i] & matched_mask == 0:
                matched.add(i)
                matched_mask |= 1 << i
                improved = True
        for f in sorted(matched):
            others = matched_mask & ~(1 << f)
            cands = [i for i in range(m)
                     if not matched_mask >> i & 1 and conflicts[i] & others == 0]
            done = False
            for a_i, e1 in enumerate(cands):
                for e2 in cands[a_i + 1:]:
                    if not conflicts[e1] >> e2 & 1:
                        matched.discard(f)
                        matched.update((e1, e2))
                        improved = True
                        done = True
                        break
                if done:
                    break
            if done:
                break
    return matched


# ---------------------------------------------------------------------------
# Certificates

@dataclass(frozen=True)
class ConstructionCertificate:
    kind: str
    parameters: dict
    vertices: int
    edge_count: int
    freeness_checked: bool
    freeness_holds: bool | None
    target_bound: Fraction | None


DETECTOR_EDGE_LIMIT = 250


def certify(kind: str, obj, family, parameters: dict,
            target_bound: Fraction | None = None,
            edge_limit: int = DETECTOR_EDGE_LIMIT) -> ConstructionCertificate:
    """Run the detector against the target family when the instance is small
    enough; otherwise emit an unchecked certificate."""
    if isinstance(obj, Hypergraph):
        host = obj
        edges = len(obj.edges)
    else:
        from .core import two_uniform
        host = two_uniform(obj)
        edges = len(obj.edges)
    checked = edges <= edge_limit
    holds = is_berge_free(host, family) if checked else None
    return ConstructionCertificate(
        kind=kind,
        parameters=parameters,
        vertices=obj.n,
        edge_count=edges,
        freeness_checked=checked,
        freeness_holds=holds,
        target_bound=target_bound,
    )
