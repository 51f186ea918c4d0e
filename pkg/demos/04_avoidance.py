# %% [markdown]
# # Squarefree words that avoid a factor
#
# Depth-first search over squarefree words, extending by one letter at a
# time and backtracking at a square or a forbidden factor.

# %%
from nonrep import TERNARY, Alphabet, load_fixture
from nonrep.avoid import (AvoidanceQuery, avoidance_by_morphism, max_avoiding,
                          tree_to_dot, verify_avoidance)

for forbid in ("12", "123", "121"):
    out = max_avoiding(AvoidanceQuery(TERNARY, (forbid,), budget=400))
    print(forbid, out.status.__class__.__name__, out.nodes_visited)
    print("   ", getattr(out.status, "max_len", None),
          [str(w) for w in getattr(out.status, "witnesses", ())])

# %% [markdown]
# With four letters one letter can simply be dropped, so the tree is
# infinite and the search stops at its budget.

# %%
print(max_avoiding(AvoidanceQuery(Alphabet(4), ("12",), budget=100)).status)

# %% [markdown]
# Checking bundled words and fixed points.

# %%
w = load_fixture("word718")
for forbidden in (("aba",), ("bab",), ("cbc",)):
    print(forbidden, verify_avoidance(w, AvoidanceQuery(w.alphabet, forbidden)))

r = avoidance_by_morphism(load_fixture("thue_1912"), 0, (), 100_000)
print(r.prefix_length, r.clean)

# %%
print(tree_to_dot(AvoidanceQuery(TERNARY, ("12",)), max_nodes=25))
