"""Neighborhood apparatus for linear hypergraphs and the per-vertex claims it
must satisfy in the absence of a Berge-K_{2,t}.

For a vertex v: N1 is everything sharing an edge with v, N2 everything else
reachable through an edge meeting N1. For u in N1, E_u collects the edges
whose only N1-vertex is u and V_u their N2-vertices; V_i unions the V_u over
the i-th edge at v. On a linear Berge-K_{2,t}-free hypergraph these obey a
chain of inequalities ending in a square-root degree bound; the audit asserts
every link of that chain as a runtime check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .berge import is_berge_free
from .core import Hypergraph, Multigraph, complete_bipartite, degree, is_linear


@dataclass(frozen=True)
class NeighborhoodProfile:
    v: int
    t: int
    n1: frozenset[int]
    n2: frozenset[int]
    e_u: dict[int, tuple[int, ...]]  # u in N1 -> edge indices with h∩N1 == {u}
    v_u: dict[int, frozenset[int]]   # u in N1 -> N2-vertices covered by E_u
    incident: tuple[int, ...]        # edge indices at v, canonical order
    v_i: tuple[frozenset[int], ...]  # union of V_u over each incident edge


@dataclass(frozen=True)
class AuditConstants:
    c1: Fraction  # (2r^2 - 4r + 1) t / 2
    c2: Fraction  # c1^2
    c3_residual: float  # measured: avg degree minus sqrt(n(t-1))/(r-1)


def profile(h: Hypergraph, v: int, t: int) -> NeighborhoodProfile:
    """All first/second-neighborhood data of v. Requires a linear input."""
    if not is_linear(h):
        raise ValueError("profile requires a linear hypergraph")
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} outside 0..{h.n - 1}")
    incident = h._vertex_edges[v]
    n1 = set()
    for i in incident:
        n1.update(h.edges[i])
    n1.discard(v)

    n2 = set()
    for i, e in enumerate(h.edges):
        if any(x in n1 for x in e):
            n2.update(e)
    n2 -= n1
    n2.discard(v)

    e_u: dict[int, tuple[int, ...]] = {}
    v_u: dict[int, frozenset[int]] = {}
    for u in sorted(n1):
        hits = []
        cover = set()
        for i in h._vertex_edges[u]:
            inter = [x for x in h.edges[i] if x in n1]
            if len(inter) == 1 and inter[0] == u:
                hits.append(i)
                cover.update(x for x in h.edges[i] if x in n2)
        e_u[u] = tuple(hits)
        v_u[u] = frozenset(cover)

    v_i = []
    for i in incident:
        union = set()
        for u in h.edges[i]:
            if u != v:
                union |= v_u[u]
        v_i.append(frozenset(union))

    return NeighborhoodProfile(v, t, frozenset(n1), frozenset(n2),
                               e_u, v_u, incident, tuple(v_i))


@dataclass
class AuditReport:
    t: int
    r: int
    n: int
    conditional: bool  # freeness assumed rather than detector-checked
    berge_free: bool | None
    violations: list[str]
    constants: AuditConstants
    global_inequality_ok: bool

    @property
    def ok(self) -> bool:
        return not self.violations and self.global_inequality_ok


AUDIT_DETECTOR_EDGE_LIMIT = 250


def audit(h: Hypergraph, t: int,
          detector_edge_limit: int = AUDIT_DETECTOR_EDGE_LIMIT) -> AuditReport:
    """Assert, for every vertex v of a linear hypergraph:

    (a) each u in N1(v) lies in few edges meeting N1(v) twice
        (<= (r-1)(t-1)+1, or t-1 when r = 2);
    (b) |V_u| >= (r-1) d(u) - (r-1)^2 t, via |E_u| >= d(u) - (r-1)t and the
        exact identity |V_u| = (r-1)|E_u| (r >= 3; for r = 2 the edge vu
        joins E_u and |V_u| = |E_u| - 1);
    (c) |V_i| >= sum_j |V_{u_j,i}| - C(r-1,2) * 2rt;
    (d) sum_i |V_i| <= (t-1) n;
    (e) sum_{u in N1} (r-1) d(u) <= (t-1) n + (r-1)(2r^2-4r+1) t d(v);

    plus the one global inequality (r-1)^2 d^2 <= (t-1)n + (r-1)(2r^2-4r+1)td
    for the average degree d. Berge-K_{2,t}-freeness is detector-checked when
    the instance is small enough, otherwise the report is conditional.
    """
    if not is_linear(h):
        raise ValueError("audit requires a linear hypergraph")
    if t < 2:
        raise ValueError("t must be >= 2")
    r, n = h.r, h.n

    conditional = len(h.edges) > detector_edge_limit
    berge_free = None
    if not conditional:
        berge_free = is_berge_free(h, [complete_bipartite(2, t)])

    violations: list[str] = []
    claim_a_cap = (t - 1) if r == 2 else (r - 1) * (t - 1) + 1
    for v in range(n):
        prof = profile(h, v, t)
        for u in sorted(prof.n1):
            heavy = sum(
                1 for i in h._vertex_edges[u]
                if sum(1 for x in h.edges[i] if x in prof.n1) >= 2
            )
            if heavy > claim_a_cap:
                violations.append(
                    f"v={v} u={u}: {heavy} edges meet N1 twice (cap {claim_a_cap})")
            eu = len(prof.e_u[u])
            vu = len(prof.v_u[u])
            if r >= 3:
                if vu != (r - 1) * eu:
                    violations.append(f"v={v} u={u}: |V_u|={vu} != (r-1)|E_u|={(r - 1) * eu}")
                if eu < degree(h, u) - (r - 1) * t:
                    violations.append(f"v={v} u={u}: |E_u|={eu} < d(u)-(r-1)t")
            else:
                if eu < degree(h, u) - t + 1:
                    violations.append(f"v={v} u={u}: |E_u|={eu} < d(u)-t+1")
                if vu != eu - 1:
                    violations.append(f"v={v} u={u}: |V_u|={vu} != |E_u|-1")
            if vu < (r - 1) * degree(h, u) - (r - 1) ** 2 * t:
                violations.append(
                    f"v={v} u={u}: |V_u|={vu} < (r-1)d(u)-(r-1)^2 t")
        slack = math.comb(r - 1, 2) * 2 * r * t
        for pos, i in enumerate(prof.incident):
            total = sum(len(prof.v_u[u]) for u in h.edges[i] if u != prof.v)
            if len(prof.v_i[pos]) < total - slack:
                violations.append(
                    f"v={v} edge {i}: |V_i|={len(prof.v_i[pos])} < {total}-{slack}")
        if sum(len(s) for s in prof.v_i) > (t - 1) * n:
            violations.append(f"v={v}: sum |V_i| exceeds (t-1)n")
        lhs = sum((r - 1) * degree(h, u) for u in prof.n1)
        rhs = (t - 1) * n + (r - 1) * (2 * r * r - 4 * r + 1) * t * degree(h, v)
        if lhs > rhs:
            violations.append(f"v={v}: degree-sum bound fails ({lhs} > {rhs})")

    d_avg = Fraction(r * len(h.edges), n) if n else Fraction(0)
    lhs_g = (r - 1) ** 2 * d_avg ** 2
    rhs_g = (t - 1) * n + (r - 1) * (2 * r * r - 4 * r + 1) * t * d_avg
    global_ok = lhs_g <= rhs_g

    c1 = Fraction((2 * r * r - 4 * r + 1) * t, 2)
    residual = float(d_avg) - math.sqrt(n * (t - 1)) / (r - 1) if n else 0.0
    constants = AuditConstants(c1, c1 * c1, residual)

    return AuditReport(
        t=t, r=r, n=n,
        conditional=conditional,
        berge_free=berge_free,
        violations=violations,
        constants=constants,
        global_inequality_ok=bool(global_ok),
    )
