# %% [markdown]
# # Morphisms and their fixed points

# %%
import numpy as np

from nonrep import (Property, classify, fixed_point_prefix, load_fixture,
                    parse_word, find_all_kinds)

tm = load_fixture("thue_morse")
one = tm.alphabet.symbols.index("1")
print(fixed_point_prefix(tm, one, 32))

# %% [markdown]
# A long prefix goes through the numpy scanner: no cubes, no overlaps,
# but plenty of squares.

# %%
w = fixed_point_prefix(tm, one, 1 << 16)
print({k.name: v for k, v in find_all_kinds(w).items()})

# %% [markdown]
# Letter frequencies in a prefix of a ternary squarefree fixed point.

# %%
leech = load_fixture("leech")
p = np.frombuffer(fixed_point_prefix(leech, 0, 50_000).letters, dtype=np.uint8)
print(np.bincount(p) / len(p))

# %% [markdown]
# `classify` separates what is proven from what is only checked up to a
# bound.

# %%
for name in ("rank3", "rank4", "rank5", "leech"):
    report = classify(load_fixture(name))
    print(name, "Thue:", report.thue_status)
    for d in report.decisions.values():
        print("   ", d)
