# # Distance distributions
#
# A fuzzy metric assigns to each pair of points a function t -> M(x, y, t),
# read as the degree to which the two points are closer than t. Here we play
# with the exact algebra of those functions.

# %%
from fractions import Fraction

from kmfuzzy import (evaluate, exponential, godel_residual_inf, level, standard, step,
                     supmin_convolve)

half = Fraction(1, 2)

# A step distribution: 0 up to t=1, then 1/2 up to t=2, then 1.
A = step([1, 2], [0, half, 1])
print(A)
print([str(evaluate(A, t)) for t in ("1/2", 1, "3/2", 2, 3)])

# %% [markdown]
# Steps are left-continuous, so at t=1 we still see the lower value.
#
# Level inversion asks for the largest t at which the distribution is still
# at most a. It is the distance between the two points "at level a".

# %%
for a in ("1/4", "1/2", "3/4"):
    print(a, level(A, a))

print(level(standard(3), "2/3"))   # t/(t+3) <= 2/3 up to t = 6
print(level(exponential(1), "1/3"))  # irrational, kept symbolic

# %% [markdown]
# Sup-min convolution combines two legs of a path. Levels simply add, which is
# how the engine computes it.

# %%
H = supmin_convolve(A, A)
print(H)
for a in ("1/4", "1/2"):
    print(a, level(H, a), "=", level(A, a), "+", level(A, a))

print(supmin_convolve(standard(1), standard(2)))

# %% [markdown]
# The Goedel residual infimum measures how far one distribution is from
# sitting below another. Comparing the direct pair x-z of the worked example
# with the two-leg bound gives 1/2.

# %%
C = step([2], [0, 1])
print(godel_residual_inf(C, H))
