"""
Cyclic 4-cuts of permutation graphs
===================================

None of the assembled graphs has a cyclic 4-cut, so the examples here come
from cycle permutation graphs with a run of aligned spokes.
"""

# %%
from permsnark import PermutationGraph, TwoFactor
from permsnark.connectivity import cyclic_edge_connectivity, verify_cut_structure
from permsnark.named import aligned_spoke_graph

g = aligned_spoke_graph(12, 4, seed=0).freeze()
pg = PermutationGraph(g, TwoFactor(g, tuple(range(12)), tuple(range(12, 24))))
r = cyclic_edge_connectivity(g, cap=5, keep_all=True)
print("lambda_c =", r, "with", len(r.all_cuts), "cyclic 4-cuts")

# %%
# Each cut takes two edges from each circuit, and the arcs on one side face
# each other across the spokes.
for w in r.all_cuts:
    rep = verify_cut_structure(pg, w.edges)
    print([g.endpoints(e) for e in w.edges], rep.to_json_dict())
