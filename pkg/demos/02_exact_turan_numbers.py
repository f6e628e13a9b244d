# Exact Turán numbers at desk scale: branch-and-bound with certified witnesses.

from bergex import complete_bipartite, complete_graph, cycle_graph, path_graph, is_linear
from bergex.search import exact_ex_r, exact_graph_ex, sandwich_check

# Maximum size of a linear (Berge-C2-free) 3-uniform hypergraph: the triangle
# packing numbers. At n = 7 the maximum is the full Steiner triple system.
c2 = cycle_graph(2)
for n in range(4, 8):
    res = exact_ex_r(n, 3, [c2])
    print(f"ex_3({n}, C2) = {res.value}   nodes={res.nodes_explored}"
          f"  witness linear: {is_linear(res.witness)}")

# Generalized graph Turán numbers: most triangles in a path-free graph.
# Forbidding the 4-vertex path leaves disjoint triangles: n/3 of them.
for k in (3, 4):
    res = exact_graph_ex(6, 3, path_graph(k))
    print(f"ex(6, K3, P{k}) = {res.value}   witness edges: {res.witness.edges}")

# The two-sided comparison: the clique count of an F-free graph bounds the
# Berge Turán number from below, and adding ex(n, F) bounds it from above.
for f, name in ((complete_bipartite(2, 2), "K22"), (complete_graph(3), "K3")):
    rep = sandwich_check(6, 3, f)
    print(f"\nsandwich at n=6, r=3, F={name}:")
    print(f"  ex(6, K3, F) = {rep.clique_ex.value}")
    print(f"  ex_3(6, F)   = {rep.hyper_ex.value}")
    print(f"  ex(6, F)     = {rep.graph_ex.value}")
    print(f"  {rep.clique_ex.value} <= {rep.hyper_ex.value} <= "
          f"{rep.clique_ex.value} + {rep.graph_ex.value}: {rep.ok}")
