"""
Double covers of a block
========================

A block has six pendant edges.  Its double covers that keep the three marked
paths together as one member tell us how the pendant edges can be shared
between members once blocks are glued.
"""

# %%
from permsnark import family_blocks, petersen
from permsnark.cover import bracket, pcdc_enumerate, pendant_bracket_conditions

b = family_blocks(petersen())[0]
sols = pcdc_enumerate(b)
print(len(sols), "covers of block 1")

# %%
for s in sols:
    owner = {name: bracket(s, e) for name, e in sorted(b.pendant.items())}
    print(owner, pendant_bracket_conditions(b, s))
