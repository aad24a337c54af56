# %% [markdown]
# # Supports from rectangles
#
# The depth of a multipartition, found by walking down the crystal, equals
# n - r(r+|m|) where r is read off one component.  The singular ones are
# rectangles.

# %%
from collections import Counter

from aspherical.crystal import depth_by_descent
from aspherical.multipartition import enumerate_multipartitions
from aspherical.parameters import HyperplaneParams
from aspherical.supports import closed_form_depth, possible_support_dims, singular_family

hp = HyperplaneParams(2, 0, 1, 0, 1)
n = 6
parts = enumerate_multipartitions(2, n)
print(all(closed_form_depth(nu, hp) == depth_by_descent(nu, hp) for nu in parts))
print(Counter(closed_form_depth(nu, hp) for nu in parts), possible_support_dims(hp, n))

# %% [markdown]
# For negative t the rectangle moves to the other component and is transposed.

# %%
print(singular_family(hp, 4))
print(singular_family(HyperplaneParams(2, 0, 1, 1, -1), 6))
