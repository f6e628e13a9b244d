"""Turán-type extremal computations for Berge hypergraphs.

Core surface: hypergraph/graph types and incidence queries (core), Berge-F
detection with certificates (berge), the hyperedge-to-pair decomposition
(reduction), the pair-coloring elimination pipeline (engine), neighborhood
audits for linear hypergraphs (linear_audit), lower-bound constructions
(constructions), exact small-instance Turán numbers (search), and the bound
catalog (bounds). The ``bergex`` command line exposes all of it.
"""

__version__ = "0.1.0"

from .berge import BergeWitness, contains_berge, is_berge_free, oracle_contains_berge
from .core import (
    CliqueCount,
    Hypergraph,
    Multigraph,
    complete_bipartite,
    complete_graph,
    count_cliques,
    cycle_graph,
    degree,
    is_linear,
    list_triangles,
    pair_multiplicity,
    path_graph,
    two_uniform,
)

__all__ = [
    "__version__",
    "Hypergraph",
    "Multigraph",
    "CliqueCount",
    "BergeWitness",
    "degree",
    "pair_multiplicity",
    "is_linear",
    "count_cliques",
    "list_triangles",
    "two_uniform",
    "complete_graph",
    "complete_bipartite",
    "path_graph",
    "cycle_graph",
    "contains_berge",
    "is_berge_free",
    "oracle_contains_berge",
]
