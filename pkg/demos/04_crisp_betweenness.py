# # Crisp betweenness
#
# y is between x and z in a metric when d(x,z) = d(x,y) + d(y,z). Orders and
# lattices have their own betweenness relations, and all of them pass the
# axioms B1 to B5.

# %%
from kmfuzzy import (FiniteMetric, LatticeTable, PosetTable, check_betweenness,
                     lattice_betweenness, metric_betweenness, order_betweenness)

d = FiniteMetric("abc", [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
B = metric_betweenness(d)
print([t for t in B.triples() if len(set(t)) == 3])
print(check_betweenness(B).text())

# %%
print(check_betweenness(order_betweenness(PosetTable.chain(4))).ok)

# four-element diamond: 0 below 1 and 2, both below 3
join = [[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]]
meet = [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]]
print(check_betweenness(lattice_betweenness(LatticeTable(join, meet))).ok)

# %% [markdown]
# Slicing a nest at higher levels can only lose betweenness triples, and the
# relation at a equals the union of the relations at levels above it.

# %%
from kmfuzzy import betweenness_at_level, check_betweenness_nest
from kmfuzzy.oracle import gen_random_nest

nest = gen_random_nest(5, 4, seed=2)
sizes = [len(betweenness_at_level(nest, a)) for a in nest.probe_levels()]
print(sizes)
print(check_betweenness_nest(nest).text())
