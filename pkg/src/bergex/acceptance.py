"""The acceptance suite: one function per criterion, each returning a
deterministic JSON-able detail document plus a pass/fail verdict and its
stated wall-clock budget.

Criterion 5 is implemented exactly as stated even though two of its
stated numbers (the ideal edge counts 60 and 168) are not attained by the
orbit construction once self-adjacent classes lose their loop; the detail
document records precisely which sub-assertions hold. See the repository
notes for the analysis.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import __version__
from .berge import contains_berge, is_berge_free, oracle_contains_berge
from .bounds import evaluate
from .constructions import (
    FurediParams,
    fano_incidence_graph,
    blowup_bipartite,
    furedi_k2t,
    furedi_stats,
    linear_via_independent_set,
    linear_via_matching,
    triangles_to_hyperedges,
)
from .core import (
    Hypergraph,
    Multigraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    is_linear,
    naive_count_cliques,
    path_graph,
    two_uniform,
)
from .engine import eliminate
from .linear_audit import audit
from .manifest import canonical_json, sha256_text
from .search import exact_ex_r, exact_graph_ex, naive_ex_r, sandwich_check

DETECTOR_SEED = 20260409
ENGINE_SEED = 20260410


@dataclass
class CriterionResult:
    number: int
    group: str
    passed: bool
    elapsed: float
    time_limit: float | None
    details: dict

    @property
    def within_budget(self) -> bool:
        return self.time_limit is None or self.elapsed <= self.time_limit

    @property
    def ok(self) -> bool:
        return self.passed and self.within_budget


def _packing_cap(n: int) -> int:
    return n * ((n - 1) // 2) // 3


def criterion_1_linear_maxima() -> tuple[bool, dict]:
    """Exact Berge-C2 (linear) maxima for n = 4..7 with cross-oracles."""
    c2 = cycle_graph(2)
    expected = {4: 1, 5: 2, 6: 4, 7: 7}
    rows = []
    ok = True
    for n, want in expected.items():
        res = exact_ex_r(n, 3, [c2])
        linear = is_linear(res.witness)
        cap = _packing_cap(n)
        cap_ok = res.value <= cap and (n == 5 or res.value == cap)
        naive_ok = True
        if n <= 5:
            naive_ok = naive_ex_r(n, 3, [c2])[0] == res.value
        row_ok = (res.value == want and res.status == "exact" and linear
                  and cap_ok and naive_ok)
        row = {
            "n": n, "value": res.value, "expected": want,
            "witness_linear": linear, "packing_cap": cap,
            "packing_cap_consistent": cap_ok,
            "naive_enumeration_agrees": naive_ok,
            "status": res.status,
        }
        if n == 7:
            covered = set()
            for e in res.witness.edges:
                covered.update(combinations(e, 2))
            row["all_pairs_covered"] = len(covered) == comb(7, 2)
            row_ok = row_ok and row["all_pairs_covered"]
        rows.append(row)
        ok = ok and row_ok
    return ok, {"rows": rows}


def criterion_2_luo() -> tuple[bool, dict]:
    """Clique-count formula for forbidden paths at desk scale."""
    rows = []
    ok = True
    for k, want in ((4, 2), (3, 0)):
        res = exact_graph_ex(6, 3, path_graph(k))
        formula = evaluate("luo", {"n": 6, "k": k, "r": 3})
        agree = (res.value == want and formula.value.compare(res.value) == 0
                 and res.status == "exact")
        rows.append({"k": k, "search": res.value, "formula": formula.value.rendered,
                     "expected": want, "agree": agree})
        ok = ok and agree
    return ok, {"rows": rows}


def criterion_3_sandwich() -> tuple[bool, dict]:
    """Exact sandwich inequalities on three desk-scale instances."""
    k22 = complete_bipartite(2, 2)
    k3 = complete_graph(3)
    cases = [(5, 3, k22, "K_{2,2}"), (6, 3, k22, "K_{2,2}"), (6, 3, k3, "K_3")]
    rows = []
    ok = True
    for n, r, f, name in cases:
        rep = sandwich_check(n, r, f)
        rows.append({
            "n": n, "r": r, "pattern": name,
            "clique_ex": rep.clique_ex.value,
            "hyper_ex": rep.hyper_ex.value,
            "graph_ex": rep.graph_ex.value,
            "lower_ok": rep.lower_ok, "upper_ok": rep.upper_ok,
            "conclusive": rep.conclusive,
        })
        ok = ok and rep.ok
    return ok, {"rows": rows}


def _pattern_pool() -> list[tuple[str, Multigraph]]:
    return [
        ("K2", complete_graph(2)),
        ("C2", cycle_graph(2)),
        ("P3", path_graph(3)),
        ("P4", path_graph(4)),
        ("K3", complete_graph(3)),
        ("K22", complete_bipartite(2, 2)),
        ("K13", complete_bipartite(1, 3)),
        ("K23", complete_bipartite(2, 3)),
    ]


def _random_host(rng: random.Random) -> Hypergraph:
    n = rng.randint(3, 7)
    r = rng.randint(2, min(4, n))
    pool = list(combinations(range(n), r))
    m = rng.randint(0, min(10, len(pool)))
    return Hypergraph(n, r, rng.sample(pool, m))


def _random_pattern(rng: random.Random) -> Multigraph:
    n = rng.randint(2, 4)
    pairs = list(combinations(range(n), 2))
    m = rng.randint(1, 5)
    return Multigraph(n, [rng.choice(pairs) for _ in range(m)])


def criterion_4_detector_oracle(instances: int = 500) -> tuple[bool, dict]:
    """Randomized agreement between the detector and the exhaustive oracle."""
    rng = random.Random(DETECTOR_SEED)
    pool = _pattern_pool()
    disagreements = 0
    bad_witnesses = 0
    positives = 0
    for _ in range(instances):
        h = _random_host(rng)
        if rng.random() < 0.3:
            f = _random_pattern(rng)
        else:
            f = rng.choice(pool)[1]
        fast = contains_berge(h, f)
        slow = oracle_contains_berge(h, f)
        if (fast is not None) != slow:
            disagreements += 1
            continue
        if fast is not None:
            positives += 1
            if not fast.is_valid_for(h, f):
                bad_witnesses += 1
    ok = disagreements == 0 and bad_witnesses == 0
    return ok, {
        "instances": instances,
        "positives": positives,
        "disagreements": disagreements,
        "invalid_witnesses": bad_witnesses,
        "seed": DETECTOR_SEED,
    }


def criterion_5_furedi() -> tuple[bool, dict]:
    """Certificates for the orbit construction at q = 5, 7 and t = 2,
    asserted at the stated ideal counts (see module docstring)."""
    k22 = complete_bipartite(2, 2)
    rows = []
    ok = True
    for q, want_vertices, want_edges, cube in ((5, 24, 60, 24 ** 3 // 4),
                                               (7, 48, 168, 48 ** 3 // 4)):
        params = FurediParams.create(q, 2)
        g = furedi_k2t(params)
        stats = furedi_stats(g, params)
        free = is_berge_free(two_uniform(g), [k22])
        vertices_ok = g.n == want_vertices
        edges_ok = len(g.edges) == want_edges
        leading_term_ok = len(g.edges) ** 2 >= cube
        rows.append({
            "q": q,
            "vertices": g.n, "vertices_expected": want_vertices,
            "edges": len(g.edges), "edges_expected": want_edges,
            "k22_free": free,
            "squared_edges": len(g.edges) ** 2,
            "leading_term_floor": cube,
            "leading_term_ok": leading_term_ok,
            "loop_classes": stats["loop_classes"],
            "epsilon": str(stats["epsilon"]),
        })
        ok = ok and vertices_ok and edges_ok and free and leading_term_ok
    note = ("self-adjacent orbit classes lose their loop, so the graphs carry "
            "58 and 164 edges against the ideal 60 and 168; both graphs are "
            "edge-maximal K_{2,2}-free, so the stated counts are unattainable "
            "from this construction")
    return ok, {"rows": rows, "analysis": note}


def criterion_6_blowup() -> tuple[bool, dict]:
    """Blow-up of the 7-point incidence graph into a 3-uniform hypergraph."""
    g = fano_incidence_graph()
    h = blowup_bipartite(g, 3, 2)
    free = is_berge_free(h, [complete_bipartite(2, 2)])
    details = {
        "vertices": h.n,
        "hyperedges": len(h.edges),
        "source_edges": len(g.edges),
        "edge_count_preserved": len(h.edges) == len(g.edges),
        "berge_k22_free": free,
    }
    ok = h.n == 21 and len(h.edges) == 21 and details["edge_count_preserved"] and free
    return ok, details


def criterion_7_triangle_replacement() -> tuple[bool, dict]:
    """Triangle replacement on the q=5, t=3 orbit graph."""
    g = furedi_k2t(FurediParams.create(5, 3))
    h = triangles_to_hyperedges(g)
    oracle_triangles = naive_count_cliques(g, 3)
    free = is_berge_free(h, [complete_bipartite(2, 3)])
    details = {
        "hyperedges": len(h.edges),
        "oracle_triangle_count": oracle_triangles,
        "sizes_agree": len(h.edges) == oracle_triangles,
        "berge_k23_free": free,
    }
    return details["sizes_agree"] and free, details


def criterion_8_linear_constructions() -> tuple[bool, dict]:
    """Both linear constructions on the q=5, t=3 graph: linear, free, audited."""
    g = furedi_k2t(FurediParams.create(5, 3))
    k23 = complete_bipartite(2, 3)
    rows = []
    ok = True
    outputs = {}
    for name, build in (("independent-set", linear_via_independent_set),
                        ("matching", linear_via_matching)):
        h, report = build(g, 3)
        outputs[name] = h
        linear = is_linear(h)
        free = is_berge_free(h, [k23])
        adt = audit(h, 3)
        rows.append({
            "construction": name,
            "hyperedges": len(h.edges),
            "linear": linear,
            "berge_k23_free": free,
            "audit_violations": len(adt.violations),
            "audit_global_ok": adt.global_inequality_ok,
            "audit_conditional": adt.conditional,
        })
        ok = ok and linear and free and adt.ok
    details = {"rows": rows,
               "matching_at_least_independent_set":
                   len(outputs["matching"].edges) >= len(outputs["independent-set"].edges)}
    return ok, details


def criterion_9_engine(instances: int = 100) -> tuple[bool, dict]:
    """Proof-mirror property suite on random 3-uniform hypergraphs."""
    rng = random.Random(ENGINE_SEED)
    f = complete_bipartite(2, 2)
    failures = []
    statuses = {"clean": 0, "berge_found": 0, "no_copy": 0, "stuck": 0}
    for idx in range(instances):
        n = rng.randint(4, 10)
        pool = list(combinations(range(n), 3))
        m = rng.randint(1, min(14, len(pool)))
        h = Hypergraph(n, 3, rng.sample(pool, m))
        rep = eliminate(h, f)
        statuses[rep.status] = statuses.get(rep.status, 0) + 1
        if rep.violations:
            failures.append({"instance": idx, "reason": rep.violations})
            continue
        if rep.iterations > len(rep.g.edges):
            failures.append({"instance": idx, "reason": "iteration cap exceeded"})
        if rep.status == "berge_found":
            if rep.witness is None or not rep.witness.is_valid_for(h, f):
                failures.append({"instance": idx, "reason": "invalid witness"})
        else:
            if contains_berge(two_uniform(rep.g1), f) is not None:
                failures.append({"instance": idx, "reason": "G1 not F-free"})
            if contains_berge(two_uniform(rep.g2), f) is not None:
                failures.append({"instance": idx, "reason": "G2 not F-free"})
        if any(c > 1 for c in rep.green_pair_incidence.values()):
            failures.append({"instance": idx, "reason": "green incidence cap violated"})
    ok = not failures
    return ok, {"instances": instances, "statuses": statuses,
                "failures": failures, "seed": ENGINE_SEED}


# Frozen regression table: (name, params, rational, root coefficient,
# radicand, 12-significant-digit rendering), all hand-derived.
FROZEN_BOUNDS = [
    ("luo", {"n": 6, "k": 4, "r": 3}, "2", "0", "0", "2"),
    ("luo", {"n": 6, "k": 3, "r": 3}, "0", "0", "0", "0"),
    ("luo", {"n": 12, "k": 4, "r": 2}, "12", "0", "0", "12"),
    ("thm_main_b", {"r": 3, "ex_value": 10}, "20", "0", "0", "20"),
    ("thm_main_b", {"r": 4, "ex_value": 7}, "56", "0", "0", "56"),
    ("thm_main_a", {"c": 3, "i": 1, "r": 3, "n": 20, "ex_value": 40},
     "80", "0", "0", "80"),
    ("thm_main_c", {"c": 1, "i": 2, "r": 3, "n": 10, "ex_value": 15},
     "90", "0", "0", "90"),
    ("furedi_k2t_ex", {"t": 2, "n": 24}, "0", "12", "24", "58.7877538268"),
    ("furedi_k2t_ex", {"t": 5, "n": 100}, "0", "50", "400", "1000"),
    ("furedi_bipartite", {"t": 2, "n": 9}, "0", "9", "9", "27"),
    ("alon_shikhelman", {"t": 3, "n": 12}, "0", "4", "24", "19.5959179423"),
    ("cor_maincor", {"t": 7, "n": 10000}, "0", "10000", "60000", "2449489.74278"),
    ("cor_k2t_lower_r", {"t": 3, "n": 27, "r": 3}, "0", "3", "162", "38.1837661841"),
    ("cor_k2t_upper_r", {"t": 9, "n": 50, "r": 3}, "0", "200/3", "400", "1333.33333333"),
    ("cor_even_cycle", {"k": 5, "ex_value": 100}, "700/3", "0", "0", "233.333333333"),
    ("cor_jiangma", {"k": 3, "r": 4, "ex_value": 10}, "80", "0", "0", "80"),
    ("timmons_upper", {"t": 2, "n": 9, "r": 3}, "3", "3", "54", "25.0454076850"),
    ("thm_linearberge", {"t": 3, "n": 36, "r": 3}, "0", "6", "72", "50.9116882454"),
    ("thm_linearlower", {"t": 5, "n": 16}, "0", "4/3", "64", "10.6666666667"),
    ("thm_linearlower2", {"t": 2, "n": 36}, "0", "6", "36", "36"),
    ("claim_clique_bound", {"c": 1, "x": 3, "n": 3, "i": 1, "r": 3, "ex_value": 3},
     "2", "0", "0", "2"),
    ("fo_c2k_upper", {"k": 5, "ex_value": 99}, "330", "0", "0", "330"),
]


def criterion_10_bounds() -> tuple[bool, dict]:
    """Bit-exact regression of the evaluator catalog against the frozen table."""
    from fractions import Fraction
    mismatches = []
    for name, params, a, q, r, rendered in FROZEN_BOUNDS:
        res = evaluate(name, params)
        got = (str(res.value.a), str(res.value.q), str(res.value.r),
               res.value.rendered)
        want = (str(Fraction(a)), str(Fraction(q)), str(Fraction(r)), rendered)
        if got != want:
            mismatches.append({"name": name, "params": params,
                               "got": got, "want": want})
    return not mismatches, {"entries": len(FROZEN_BOUNDS), "mismatches": mismatches}


CRITERIA = {
    1: ("linear-maxima", criterion_1_linear_maxima, 60.0),
    2: ("luo", criterion_2_luo, 10.0),
    3: ("sandwich", criterion_3_sandwich, 600.0),
    4: ("detector", criterion_4_detector_oracle, 300.0),
    5: ("furedi", criterion_5_furedi, None),
    6: ("blowup", criterion_6_blowup, 60.0),
    7: ("triangles", criterion_7_triangle_replacement, 120.0),
    8: ("linear-constructions", criterion_8_linear_constructions, 300.0),
    9: ("engine", criterion_9_engine, 300.0),
    10: ("bounds", criterion_10_bounds, 1.0),
}


def run_criterion(number: int) -> CriterionResult:
    group, fn, limit = CRITERIA[number]
    start = time.monotonic()
    passed, details = fn()
    elapsed = time.monotonic() - start
    return CriterionResult(number, group, passed, elapsed, limit, details)


def criterion_11_replay(first_pass: dict[int, str] | None = None) -> tuple[bool, dict]:
    """Determinism: re-running criteria 1-10 reproduces byte-identical
    detail documents."""
    if first_pass is None:
        first_pass = {n: sha256_text(canonical_json(run_criterion(n).details))
                      for n in CRITERIA}
    rows = []
    ok = True
    for n in CRITERIA:
        digest = sha256_text(canonical_json(run_criterion(n).details))
        same = digest == first_pass[n]
        rows.append({"criterion": n, "reproduced": same, "sha256": digest})
        ok = ok and same
    return ok, {"rows": rows, "version": __version__}


def run_all(only: str | None = None) -> list[CriterionResult]:
    """Run the acceptance suite (optionally a single group) in order."""
    groups = {g: n for n, (g, _, _) in CRITERIA.items()}
    results: list[CriterionResult] = []
    if only is not None and only != "replay":
        if only not in groups:
            raise ValueError(f"unknown group {only!r}; choose from "
                             f"{sorted(groups) + ['replay']}")
        results.append(run_criterion(groups[only]))
        return results
    first_pass: dict[int, str] = {}
    for n in sorted(CRITERIA):
        res = run_criterion(n)
        first_pass[n] = sha256_text(canonical_json(res.details))
        results.append(res)
    start = time.monotonic()
    passed, details = criterion_11_replay(first_pass)
    results.append(CriterionResult(11, "replay", passed,
                                   time.monotonic() - start, None, details))
    if only == "replay":
        return [results[-1]]
    return results
