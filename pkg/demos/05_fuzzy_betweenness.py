# # Fuzzy betweenness, two ways
#
# The implication construction works directly on the distributions. The nest
# construction takes the highest level up to which the triple stays metric
# between. On step spaces the two agree exactly.

# %%
from fractions import Fraction

from kmfuzzy import (bd_from_nest, bm_from_fuzzy_metric, check_equality, check_fuzzy_axioms,
                     from_entries, level_cut, nest_from_fuzzy_metric, nonsplit_bm, step)
from kmfuzzy.oracle import gen_random_step_space, grid_bm

half = Fraction(1, 2)
A = step([1, 2], [0, half, 1])
C = step([2], [0, 1])
space = from_entries("xyz", [[None, A, C], [A, None, A], [C, A, None]])

bm = bm_from_fuzzy_metric(space)
bd = bd_from_nest(nest_from_fuzzy_metric(space))
print(bm[0, 1, 2], bd[0, 1, 2], grid_bm(space)[(0, 1, 2)])
print(bm[0, 2, 1], bd[0, 2, 1])
print(check_fuzzy_axioms(bm, "FBR").text())

# %% [markdown]
# Cutting at a level gives back crisp betweenness.

# %%
print((0, 1, 2) in level_cut(bm, half), (0, 1, 2) in level_cut(bm, "3/4"))

# %%
worst = max(check_equality(gen_random_step_space(2 + s % 5, 1 + s % 8, s))[1] for s in range(100))
print("largest gap over 100 random spaces:", worst)

# %% [markdown]
# Replacing the supremum over splits s + r = t by the single split s = r = t/2
# loses reflexivity: the grade of (x, y, y) drops to 0.

# %%
ns = nonsplit_bm(space)
print(ns[0, 1, 1], check_fuzzy_axioms(ns, "FBR")["FBR2"].line())
