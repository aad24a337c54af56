# %% [markdown]
# # Roots and slice quivers

# %%
import itertools

from aspherical.quiver import classify_root, cyclic_quiver, grassmannian_slice, cherednik_slice
from aspherical.parameters import HyperplaneParams

q = cyclic_quiver(3)
for v in itertools.product(range(3), repeat=3):
    if any(v):
        print(v, classify_root(q, v).value)

# %% [markdown]
# Grassmannian slices reproduce (s, w - 2v + 2s, v - s).

# %%
for s in range(3):
    sl = grassmannian_slice(2, 5, s)
    print(s, sl.vhat, sl.what, [str(x) for x in sl.lambda_hat])

# %% [markdown]
# The Cherednik slices come out shifted from t - s by a constant; the
# offset is 2(j - i)/l when m <= 0.

# %%
hp = HyperplaneParams(2, 0, 1, 0, 1)
for s in range(3):
    sl = cherednik_slice(hp, 6, s)
    print(s, sl.vhat, sl.what, [str(x) for x in sl.lambda_hat], "t - s =", hp.t - s)
