# %% [markdown]
# # Parameters and the aspherical locus
#
# Three coordinate systems describe the same parameter point: (c0, d), (kappa, h)
# and (kappa, s).  Everything is exact.

# %%
from fractions import Fraction

from aspherical.parameters import (
    CParams, c_to_h, c_to_s, enumerate_aspherical_hyperplanes, is_aspherical_c,
    lambda_classical, lambda_quantum, rectangle_bound,
)

c = CParams(2, -1, (0, -2))
print("h =", c_to_h(c).h, " s =", [str(x) for x in c_to_s(c).s])
print("lambda^c =", [str(x) for x in lambda_classical(c)], " lambda^q =", [str(x) for x in lambda_quantum(c)])

# %% [markdown]
# A point is aspherical when one of finitely many integer relations holds.
# The witness tells which one.

# %%
print(is_aspherical_c(CParams(2, Fraction(-1, 2), (0, Fraction(1, 7))), 2))
print(is_aspherical_c(CParams(2, Fraction(1, 7), (0, 1)), 2))
print(is_aspherical_c(CParams(2, Fraction(1, 7), (0, Fraction(1, 11))), 2))

# %% [markdown]
# The hyperplanes of type (b), in the normal form s_i - s_j = m + t/kappa.

# %%
for hp in enumerate_aspherical_hyperplanes(2, 6)[:12]:
    print(hp, " q =", rectangle_bound(6, hp.m))
