"""
Contracting the spokes
======================

Contracting every spoke turns a permutation graph into a 4-regular graph whose
transitions forbid walking straight along an F-circuit.
"""

# %%
from permsnark import build_family, contract_spokes, petersen
from permsnark.connectivity import essential_edge_connectivity, even_cut_parity_check
from permsnark.cover import ccd_search

k5 = contract_spokes(petersen())
print("order", k5.order, "edges", len(k5.edges))
for v in range(k5.order):
    print(v, [sorted(t) for t in k5.transitions[v]])

# %%
print("compatible decomposition:", ccd_search(k5).status)

# %%
# The contracted H_n stay essentially 6-edge-connected and keep the
# compatible decomposition out of reach.
for n in (1, 2):
    t = contract_spokes(build_family(n))
    ess = essential_edge_connectivity(t.as_graph(), cap=7)
    parity = even_cut_parity_check(t)
    v = ccd_search(t)
    print(f"H{n} -> order {t.order}: essential {ess}, cuts even {parity['all_even']}, "
          f"ccd {v.status} ({v.nodes_expanded} nodes)")
