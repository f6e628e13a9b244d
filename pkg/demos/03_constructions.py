# Lower-bound constructions, each certified by the detector.

from bergex import complete_bipartite, cycle_graph, two_uniform, is_berge_free
from bergex.constructions import (
    FurediParams, furedi_k2t, furedi_stats, fano_incidence_graph,
    triangles_to_hyperedges, blowup_bipartite, cycle_blowup, certify,
)

# The K_{2,t}-free orbit graph over GF(q): classes of nonzero pairs under the
# order-(t-1) subgroup, adjacent when the dot product lands in the subgroup.
params = FurediParams.create(5, 3)
g = furedi_k2t(params)
stats = furedi_stats(g, params)
print("orbit graph q=5, t=3:", g)
print("  stats:", stats)
print("  note: the", stats["loop_classes"], "self-adjacent classes each cost",
      "half an edge against the ideal", stats["ideal_edges"])
print("  K23-free:", is_berge_free(two_uniform(g), [complete_bipartite(2, 3)]))

# Replacing each triangle by a hyperedge keeps Berge-K_{2,t}-freeness.
h = triangles_to_hyperedges(g)
print("\ntriangle replacement:", h)
print("  Berge-K23-free:", is_berge_free(h, [complete_bipartite(2, 3)]))

# Blowing up a bipartite K_{2,t}-free graph: each edge becomes one r-set over
# floor(r/2) + ceil(r/2) clones, preserving the edge count exactly.
inc = fano_incidence_graph()
blow = blowup_bipartite(inc, 3, 2)
print("\nincidence-graph blow-up:", blow, "(one hyperedge per incidence)")
cert = certify("blowup", blow, [complete_bipartite(2, 2)], {"r": 3, "t": 2})
print("  certificate:", cert)

# The same trick on a large-girth bipartite graph kills all short Berge cycles.
hc = cycle_blowup(cycle_graph(8), 4, 3)
print("\ncycle blow-up of C8 (girth 8) at r=4:", hc)
family = [cycle_graph(j) for j in range(3, 7)]
print("  Berge-C3..C6-free:", is_berge_free(hc, family))
