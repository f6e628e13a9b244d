"""Berge-F containment: certified detection and a brute-force oracle.

A hypergraph contains a Berge-F when the pattern vertices embed injectively
and the pattern edges map bijectively onto distinct hyperedges, each
containing its image pair. Detection enumerates core embeddings with
multiplicity pruning and settles each complete embedding with a bipartite
matching between pattern edges and candidate hyperedges.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .core import Hypergraph, Multigraph
from .matching import max_matching

ORACLE_MAX_PATTERN_VERTICES = 8
ORACLE_MAX_PATTERN_EDGES = 6
ORACLE_MAX_HYPEREDGES = 12


class OracleLimitError(ValueError):
    """Instance exceeds the documented brute-force oracle limits."""


@dataclass(frozen=True)
class BergeWitness:
    """Certificate of Berge-F containment.

    core_map[i] is the host vertex for pattern vertex i; edge_map[j] is the
    hyperedge index assigned to pattern edge j (edges in the pattern's
    canonical order).
    """

    core_map: tuple[int, ...]
    edge_map: tuple[int, ...]

    def violations(self, h: Hypergraph, f: Multigraph) -> list[str]:
        out = []
        if len(self.core_map) != f.n:
            out.append("core_map does not cover the pattern vertex set")
            return out
        if len(set(self.core_map)) != len(self.core_map):
            out.append("core_map is not injective")
        if any(not 0 <= v < h.n for v in self.core_map):
            out.append("core_map hits a vertex outside the host")
        if len(self.edge_map) != len(f.edges):
            out.append("edge_map does not cover the pattern edge set")
            return out
        if len(set(self.edge_map)) != len(self.edge_map):
            out.append("edge_map images are not pairwise distinct")
        for j, (a, b) in enumerate(f.edges):
            hi = self.edge_map[j]
            if not 0 <= hi < len(h.edges):
                out.append(f"edge_map[{j}] = {hi} is not a hyperedge index")
                continue
            edge = h.edges[hi]
            if self.core_map[a] not in edge or self.core_map[b] not in edge:
                out.append(f"pattern edge {j} maps to hyperedge {hi} missing its endpoints")
        return out

    def is_valid_for(self, h: Hypergraph, f: Multigraph) -> bool:
        return not self.violations(h, f)


def _pattern_order(f: Multigraph) -> list[int]:
    # descending degree (with multiplicity), ties by vertex id
    return sorted(range(f.n), key=lambda v: (-f.degree(v), v))


def _saturating_assignment(h: Hypergraph, f: Multigraph, image: list[int],
                           require_edge: int | None) -> list[int] | None:
    """Match pattern edges to distinct hyperedges over a fixed embedding.

    Returns the hyperedge index per pattern edge, or None. When require_edge
    is given, only assignments using that hyperedge are accepted.
    """
    cand: list[tuple[int, ...]] = []
    for a, b in f.edges:
        hs = h.edges_containing_pair(image[a], image[b])
        if not hs:
            return None
        cand.append(hs)

    m = len(f.edges)
    if require_edge is None:
        size, match_left, _ = max_matching(m, cand)
        if size == m:
            return [match_left[j] for j in range(m)]
        return None

    for j in range(m):
        if require_edge not in cand[j]:
            continue
        rest = [
            tuple(x for x in cand[k] if x != require_edge)
            for k in range(m) if k != j
        ]
        size, match_left, _ = max_matching(m - 1, rest)
        if size == m - 1:
            out = []
            it = iter(match_left)
            for k in range(m):
                out.append(require_edge if k == j else next(it))
            return out
    return None


def contains_berge(h: Hypergraph, f: Multigraph,
                   require_edge: int | None = None) -> BergeWitness | None:
    """First Berge-F witness in the fixed enumeration order, or None.

    Exact, no false negatives. Core vertices are embedded in descending
    pattern-degree order with pruning on pair multiplicity (a pattern pair of
    multiplicity k needs an image pair lying in at least k hyperedges).
    With require_edge set, only witnesses whose edge_map uses that hyperedge
    are reported; this is the incremental form used by the exact search.
    """
    if len(f.edges) > len(h.edges) or f.n > h.n:
        return None
    if require_edge is not None and not 0 <= require_edge < len(h.edges):
        raise ValueError(f"require_edge {require_edge} is not a hyperedge index")

    order = _pattern_order(f)
    fmult = f.edge_multiplicity
    # pattern neighbors placed earlier in the order, with required multiplicity
    placed_constraints: list[list[tuple[int, int]]] = []
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        cons = []
        for (a, b), k in fmult.items():
            other = b if a == v else a if b == v else None
            if other is not None and pos[other] < pos[v]:
                cons.append((other, k))
        placed_constraints.append(cons)

    require_mask = h.masks[require_edge] if require_edge is not None else None
    image = [-1] * f.n
    used_mask = 0
    full = (1 << h.n) - 1

    def place(depth: int) -> BergeWitness | None:
        nonlocal used_mask
        if depth == f.n:
            if require_mask is not None:
                if not any(
                    require_mask >> image[a] & 1 and require_mask >> image[b] & 1
                    for a, b in f.edges
                ):
                    return None
            assigned = _saturating_assignment(h, f, image, require_edge)
            if assigned is None:
                return None
            return BergeWitness(tuple(image), tuple(assigned))
        v = order[depth]
        cand = full & ~used_mask
        for other, k in placed_constraints[depth]:
            cand &= h.partner_mask(image[other], min(k, 2))
        rem = cand
        while rem:
            low = rem & -rem
            x = low.bit_length() - 1
            rem ^= low
            ok = True
            for other, k in placed_constraints[depth]:
                if k > 2 and len(h.edges_containing_pair(image[other], x)) < k:
                    ok = False
                    break
            if not ok:
                continue
            image[v] = x
            used_mask |= low
            w = place(depth + 1)
            if w is not None:
                return w
            used_mask ^= low
            image[v] = -1
        return None

    return place(0)


def is_berge_free(h: Hypergraph, family) -> bool:
    """True iff h contains no Berge-F for any pattern F in the family."""
    return all(contains_berge(h, f) is None for f in family)


def oracle_contains_berge(h: Hypergraph, f: Multigraph) -> bool:
    """Exhaustive cross-validation oracle: every injection of the pattern
    vertices, every injective edge-to-hyperedge assignment, no ordering
    heuristics and no matching machinery. Sizes are capped."""
    if f.n > ORACLE_MAX_PATTERN_VERTICES:
        raise OracleLimitError(f"pattern has {f.n} vertices > {ORACLE_MAX_PATTERN_VERTICES}")
    if len(f.edges) > ORACLE_MAX_PATTERN_EDGES:
        raise OracleLimitError(f"pattern has {len(f.edges)} edges > {ORACLE_MAX_PATTERN_EDGES}")
    if len(h.edges) > ORACLE_MAX_HYPEREDGES:
        raise OracleLimitError(f"host has {len(h.edges)} hyperedges > {ORACLE_MAX_HYPEREDGES}")
    if len(f.edges) > len(h.edges) or f.n > h.n:
        return False

    m = len(f.edges)
    masks = h.masks

    def assign(j: int, used: int, image) -> bool:
        if j == m:
            return True
        a, b = f.edges[j]
        want = (1 << image[a]) | (1 << image[b])
        for hi in range(len(masks)):
            if used >> hi & 1:
                continue
            if masks[hi] & want == want:
                if assign(j + 1, used | (1 << hi), image):
                    return True
        return False

    for image in permutations(range(h.n), f.n):
        if assign(0, 0, image):
            return True
    return False
