# # From fuzzy metrics to nests of metrics and back
#
# Fixing a level a and inverting every distribution gives a classical metric
# d_a. The family of these slices is a nest, and the space can be rebuilt from it
# without loss.

# %%
from fractions import Fraction

from kmfuzzy import (from_entries, fuzzy_metric_from_nest, nest_from_fuzzy_metric,
                     roundtrip_check, step, validate_nest)
from kmfuzzy.oracle import gen_random_nest, gen_random_step_space

half = Fraction(1, 2)
A = step([1, 2], [0, half, 1])
C = step([2], [0, 1])
space = from_entries("xyz", [[None, A, C], [A, None, A], [C, A, None]])

nest = nest_from_fuzzy_metric(space)
for a in ("1/4", "3/4"):
    print(a, [[str(v) for v in row] for row in nest.slice(a)])
print(validate_nest(nest).text())

# %%
print(fuzzy_metric_from_nest(nest) == space)
print(roundtrip_check(space), roundtrip_check(nest))

# %% [markdown]
# The same holds on random instances.

# %%
diffs = 0
for seed in range(200):
    diffs += not roundtrip_check(gen_random_step_space(2 + seed % 5, 1 + seed % 8, seed))[0]
    diffs += not roundtrip_check(gen_random_nest(2 + seed % 5, seed % 8, seed))[0]
print("differences:", diffs)
