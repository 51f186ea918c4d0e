# %% [markdown]
# # Uniform squarefree morphisms, rank by rank
#
# A uniform ternary morphism of rank L is squarefree iff the images of the
# twelve squarefree words of length 3 are squarefree.  Pairs of images
# that already clash are pruned before triples are formed.

# %%
import time

from nonrep.search import search_uniform_squarefree, search_cyclic_squarefree
from nonrep.io import emit_census_table

for rank in range(2, 13):
    t = time.perf_counter()
    rep = search_uniform_squarefree(rank)
    print(f"rank {rank:2d}: pool {rep.notes['image_pool']:4d}  survivors {len(rep.survivors):4d}"
          f"  orbits {len(rep.orbit_classes)}  {time.perf_counter() - t:.2f}s")

# %% [markdown]
# Letter permutations on either side, and reversal of all images, form a
# group of 72 transforms.  At rank 11 the survivors split into two full
# orbits.

# %%
rep = search_uniform_squarefree(11)
for c in rep.orbit_classes:
    print(c.size, c.representative)
print(emit_census_table(rep).splitlines()[:4])

# %% [markdown]
# Cyclic morphisms commute with 1 -> 2 -> 3 -> 1, so one image fixes the
# other two.  The first squarefree ones appear at rank 13.

# %%
for rank in (11, 12, 13):
    print(rank, [m.key() for m in search_cyclic_squarefree(rank).survivors])
