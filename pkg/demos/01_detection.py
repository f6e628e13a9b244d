# Berge pattern detection: witnesses and the exhaustive cross-check.

from bergex import (
    Hypergraph, complete_bipartite, complete_graph, cycle_graph,
    contains_berge, is_berge_free, oracle_contains_berge, is_linear,
)
from bergex.constructions import fano_plane

# The 7-point Steiner triple system: every pair of points on exactly one line.
fano = fano_plane()
print("host:", fano)
print("lines:", list(fano.edges))
print("linear:", is_linear(fano))

# A Berge copy of a pattern graph maps each pattern edge into its own
# hyperedge. The two-parallel-edge pattern needs two hyperedges sharing a
# pair, which a linear hypergraph never has.
c2 = cycle_graph(2)
print("\ncontains Berge-C2:", contains_berge(fano, c2))
print("Berge-C2-free == linear:", is_berge_free(fano, [c2]) == is_linear(fano))

# Dense patterns do embed: four lines through the pairs of a 4-cycle give a
# Berge-K_{2,2}, and any three lines in general position give a Berge-K_3.
k22 = complete_bipartite(2, 2)
w = contains_berge(fano, k22)
print("\nBerge-K22 witness:", w)
print("  core vertices:", w.core_map, "-> lines", [fano.edges[i] for i in w.edge_map])
print("  re-verifies:", w.is_valid_for(fano, k22))

# K_{2,3} needs six distinct lines around two centers; the plane is too tight.
k23 = complete_bipartite(2, 3)
print("\ncontains Berge-K23:", contains_berge(fano, k23))

# The brute-force oracle retraces everything without pruning or matching.
print("\noracle agrees on K22:", oracle_contains_berge(fano, k22))
print("oracle agrees on K23:", oracle_contains_berge(fano, k23))

# Containment is monotone: adding hyperedges never destroys a witness.
bigger = Hypergraph(8, 3, list(fano.edges) + [(0, 1, 7)])
print("\nafter adding a hyperedge, K22 still found:",
      contains_berge(bigger, k22) is not None)
