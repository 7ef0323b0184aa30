"""
Building the permutation snark family
=====================================

Four Petersen blocks glued by the shipped table give H1; feeding H1 back in
as the first source gives H2, and so on.
"""

# %%
from permsnark import build_family, family_blocks, load_canonical_table, petersen
from permsnark.graph import emit_graph6, girth

p10 = petersen()
print("Petersen circuits:", p10.factor.circuits)

# %%
# A block keeps 14 vertices of its source; the three marked paths cover them.
blocks = family_blocks(p10)
for i, b in enumerate(blocks, start=1):
    sizes = {name: len(path) for name, path in b.paths.items()}
    print(f"block {i}: retained {b.retain}, fragment {b.fragment.order}v/{b.fragment.size}e, paths {sizes}")

# %%
table = load_canonical_table()
print("orientation", table.orientation, "with", len(table.pairs), "glued pairs")

# %%
# Each level adds 24 vertices.
for n in range(5):
    h = build_family(n)
    print(f"H{n}: order {h.order:3d}  girth {girth(h.graph)}  graph6 {emit_graph6(h.graph)[:24]}...")
