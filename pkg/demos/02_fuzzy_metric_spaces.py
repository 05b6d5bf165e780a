# # Fuzzy metric spaces
#
# A finite space is a matrix of distributions. `validate` checks the six axioms
# and points at a triple (and a level) whenever the triangle axiom breaks.

# %%
from fractions import Fraction

from kmfuzzy import (FiniteMetric, TNorm, exponential, exponential_from_metric, from_entries,
                     standard_from_metric, step, validate)

half = Fraction(1, 2)
A = step([1, 2], [0, half, 1])
C = step([2], [0, 1])

space = from_entries("xyz", [[None, A, C], [A, None, A], [C, A, None]])
print(validate(space).text())

# %% [markdown]
# Stretch the x-z distance to 5 and the space breaks: at level 1/4 the slice
# distances are 5 against 1 + 1.

# %%
far = step([5], [0, 1])
broken = from_entries("xyz", [[None, A, far], [A, None, A], [far, A, None]])
print(validate(broken)["FM4"].line())

# %% [markdown]
# Classical metrics give two closed-form families. The standard one works
# under every t-norm; the exponential one needs the product.

# %%
d = FiniteMetric("pqr", [[0, 1, 3], [1, 0, 2], [3, 2, 0]])
for kind in TNorm:
    print(kind.value, validate(standard_from_metric(d, kind)).ok)
print("exp/prod", validate(exponential_from_metric(d)).ok)

# Under the product, exponential scales 1 and 1 tolerate a third side of 4 but not 5.
E = exponential
for third in (4, 5):
    s = from_entries("xyz", [[None, E(1), E(third)], [E(1), None, E(1)], [E(third), E(1), None]],
                     TNorm.PROD)
    print(third, validate(s)["FM4"].passed)
