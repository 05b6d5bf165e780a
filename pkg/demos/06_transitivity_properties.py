# # Four- and five-point transitivity
#
# The eight four-point properties P1..P8 and the six five-point ones T1..T6
# are implications between memberships. Metric betweenness satisfies P2 and P3
# (end-point transitivity) but not the rest, as small examples show.

# %%
from kmfuzzy import FiniteMetric, check_transitivities, metric_betweenness
from kmfuzzy.oracle import gen_random_metric

two = metric_betweenness(FiniteMetric("ab", [[0, 1], [1, 0]]))
print(check_transitivities(two).text())

# %% [markdown]
# With two points, x = y = a and s = t = b already break P1: (a,b,b) and
# (b,b,a) are between but (a,b,a) is not. Insisting on distinct points does
# not rescue it either. The taxicab square below has x-s-t and s-t-y on
# geodesics while s is not between x and y.

# %%
square = FiniteMetric("xsty", [[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]])
print(check_transitivities(metric_betweenness(square), distinct=True)["P1"].line())

# %% [markdown]
# On points of a line every four-point property holds for distinct points,
# while the five-point ones still fail.

# %%
xs = [0, 1, 3, 4, 7]
line = FiniteMetric("abcde", [[abs(p - q) for q in xs] for p in xs])
rep = check_transitivities(metric_betweenness(line), distinct=True)
print({c.name: c.passed for c in rep})

# %%
from collections import Counter

fails = Counter()
for seed in range(100):
    for c in check_transitivities(metric_betweenness(gen_random_metric(2 + seed % 5, seed))).failures():
        fails[c.name] += 1
print(dict(sorted(fails.items())))
