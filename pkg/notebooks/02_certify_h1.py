"""
Certifying H1
=============

Colouring, cyclic connectivity and the cover search on the first new graph.
"""

# %%
import time

from permsnark import build_family
from permsnark.connectivity import cyclic_edge_connectivity
from permsnark.cover import find_any_cdc, find_cdc_containing, three_edge_coloring
from permsnark.factor import verify_permutation_structure
from permsnark.graph import Subgraph

h1 = build_family(1)
print(verify_permutation_structure(h1.graph, h1.factor).to_json_dict())

# %%
# Both colouring routes must agree; the carving route also reports its width.
for method in ("backtrack", "carving"):
    t0 = time.perf_counter()
    v = three_edge_coloring(h1.graph, method=method)
    print(f"{method:9s} {v.status} nodes={v.nodes_expanded} {time.perf_counter() - t0:.3f}s")

# %%
r = cyclic_edge_connectivity(h1.graph, cap=6)
print("lambda_c =", r, "witness sides", len(r.witness.side_a), "/", len(r.witness.side_b))

# %%
# No circuit double cover keeps both F-circuits, whichever route is used.
f = Subgraph(h1.graph, frozenset(h1.factor.edge_ids))
for method in ("reduction", "direct"):
    v = find_cdc_containing(h1.graph, f, method=method)
    print(f"{method:9s} {v.status} nodes={v.nodes_expanded}")

# %%
# Other circuit double covers do exist.
v = find_any_cdc(h1.graph)
print("some CDC:", v.status, "with", len(v.solution.members), "circuits")
