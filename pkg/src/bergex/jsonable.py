"""Plain-dict views of the result objects, shared by the CLI and the
acceptance runner. Wall-clock timings never enter these documents so replays
compare byte-identical."""

from __future__ import annotations

from fractions import Fraction

from .berge import BergeWitness
from .bounds import BoundResult
from .constructions import ConstructionCertificate
from .engine import EngineReport, SelectionReport
from .linear_audit import AuditReport
from .reduction import Gp2Decomposition, Gp2Report
from .search import SandwichReport, SearchResult
from .serial import to_json_doc


def frac_str(x) -> str:
    return str(Fraction(x))


def witness_doc(w: BergeWitness | None) -> dict | None:
    if w is None:
        return None
    return {"core_map": list(w.core_map), "edge_map": list(w.edge_map)}


def search_doc(res: SearchResult) -> dict:
    return {
        "value": res.value,
        "status": res.status,
        "nodes_explored": res.nodes_explored,
        "witness": to_json_doc(res.witness),
    }


def sandwich_doc(rep: SandwichReport) -> dict:
    return {
        "n": rep.n,
        "r": rep.r,
        "clique_ex": search_doc(rep.clique_ex),
        "hyper_ex": search_doc(rep.hyper_ex),
        "graph_ex": search_doc(rep.graph_ex),
        "lower_ok": rep.lower_ok,
        "upper_ok": rep.upper_ok,
        "conclusive": rep.conclusive,
        "ok": rep.ok,
    }


def decomposition_doc(d: Gp2Decomposition) -> dict:
    return {
        "blue_graph": to_json_doc(d.blue_graph),
        "blue_hyperedges": sorted(d.blue_hyperedges),
        "pick": [list(p) if p is not None else None for p in d.pick],
        "order": list(d.order),
    }


def gp2_report_doc(rep: Gp2Report) -> dict:
    return {
        "counting_identity_ok": rep.counting_identity_ok,
        "clique_bound_ok": rep.clique_bound_ok,
        "blue_hyperedge_count": rep.blue_hyperedge_count,
        "clique_count": rep.clique_count,
        "host_berge_free": rep.host_berge_free,
        "blue_graph_f_free": rep.blue_graph_f_free,
        "lifted_witness": witness_doc(rep.lifted_witness),
        "all_ok": rep.all_ok,
    }


def selection_doc(sel: SelectionReport) -> dict:
    return {
        "s_prime": [list(p) for p in sel.s_prime],
        "blue_pair_count": sel.blue_pair_count,
        "achieved_ratio": frac_str(sel.achieved_ratio) if sel.achieved_ratio is not None else None,
        "claimed_ratio": frac_str(sel.claimed_ratio),
        "below_claimed": sel.below_claimed,
    }


def engine_doc(rep: EngineReport, include_trace: bool = False) -> dict:
    doc = {
        "status": rep.status,
        "witness": witness_doc(rep.witness),
        "selection": selection_doc(rep.selection),
        "g": to_json_doc(rep.g),
        "g1": to_json_doc(rep.g1),
        "g2": to_json_doc(rep.g2),
        "deleted": [list(p) for p in rep.deleted],
        "green_pair_incidence": {f"{u},{v}": c for (u, v), c in sorted(rep.green_pair_incidence.items())},
        "blue_hyperedges": rep.blue_hyperedges,
        "green_hyperedges": rep.green_hyperedges,
        "purple_hyperedges": rep.purple_hyperedges,
        "purple_pair_count": rep.x,
        "iterations": rep.iterations,
        "violations": list(rep.violations),
    }
    if include_trace:
        doc["trace"] = [
            {
                "copy_pairs": [list(p) for p in t.copy_pairs],
                "copy_has_blue": t.copy_has_blue,
                "bad_set": [list(p) for p in t.bad_set] if t.bad_set is not None else None,
                "deleted": list(t.deleted) if t.deleted is not None else None,
                "red_incidence_at_deletion": t.red_incidence_at_deletion,
                "recolored_green": list(t.recolored_green),
            }
            for t in rep.trace
        ]
    return doc


def audit_doc(rep: AuditReport) -> dict:
    return {
        "t": rep.t,
        "r": rep.r,
        "n": rep.n,
        "conditional": rep.conditional,
        "berge_free": rep.berge_free,
        "violations": list(rep.violations),
        "constants": {
            "c1": frac_str(rep.constants.c1),
            "c2": frac_str(rep.constants.c2),
            "c3_residual": repr(rep.constants.c3_residual),
        },
        "global_inequality_ok": rep.global_inequality_ok,
        "ok": rep.ok,
    }


def certificate_doc(cert: ConstructionCertificate, stats: dict | None = None) -> dict:
    doc = {
        "kind": cert.kind,
        "parameters": cert.parameters,
        "vertices": cert.vertices,
        "edge_count": cert.edge_count,
        "freeness_checked": cert.freeness_checked,
        "freeness_holds": cert.freeness_holds,
        "target_bound": frac_str(cert.target_bound) if cert.target_bound is not None else None,
    }
    if stats:
        doc["stats"] = {
            k: (frac_str(v) if isinstance(v, Fraction) else v)
            for k, v in stats.items()
        }
    return doc


def bound_doc(res: BoundResult) -> dict:
    return {
        "name": res.name,
        "params": {k: (frac_str(v) if isinstance(v, Fraction) else v)
                   for k, v in res.params.items()},
        "side": res.side,
        "value": res.value.json_fields(),
        "assumptions": list(res.assumptions),
        "extras": {k: v.json_fields() for k, v in res.extras.items()},
        "advisory": res.advisory,
    }
