# %% [markdown]
# # Finding repetitions
#
# Four kinds of repetition are tracked: squares XX, cubes XXX, overlaps
# aXaXa and weak squares aXXa.  Each detector returns the leftmost
# occurrence (shortest among those), with a 1-based start and period |X|.

# %%
from nonrep import parse_word, find_square, find_cube, find_overlap, find_weak_square

w = parse_word("212321232")
print(find_square(w), "|", find_overlap(w), "|", find_cube(w))

# %% [markdown]
# The overlap above is 2·123·2·123·2.  A weak square is a square with an
# equal letter on each side; X may be empty, so "11" already counts.

# %%
print(find_weak_square(parse_word("11")))
print(find_weak_square(parse_word("abccbda")))

# %% [markdown]
# Squarefree ternary words are plentiful but their count grows slowly.

# %%
from nonrep import TERNARY, Property, enumerate_words

print([len(enumerate_words(TERNARY, n, Property.SQUAREFREE)) for n in range(13)])

# %% [markdown]
# Over two letters, forbidding both cubes and weak squares leaves very
# little room.

# %%
from nonrep import BINARY

for n in range(7):
    ws = enumerate_words(BINARY, n, (Property.CUBEFREE, Property.WEAKLY_SQUAREFREE))
    print(n, [str(x) for x in ws])
