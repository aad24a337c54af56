# %% [markdown]
# # Crystal operators at a Weil-generic point of a hyperplane
#
# kappa is a formal symbol and the charges satisfy a single relation, so the
# boxes split into z-classes and each class carries a +/- signature.

# %%
from aspherical.crystal import Convention, depth_by_descent, e_tilde, signature, z_classes
from aspherical.multipartition import parse_multipartition
from aspherical.parameters import HyperplaneParams

hp = HyperplaneParams(2, 0, 1, -1, 0)
nu = parse_multipartition("((2,2),(2))")
for z in z_classes(nu, hp):
    print(z, signature(nu, z, hp).word)

# %% [markdown]
# The two reading directions give opposite answers on the class of content 0.

# %%
z = next(z for z in z_classes(nu, hp) if z.content == 0)
for conv in Convention:
    print(conv.value, signature(nu, z, hp, conv).word, "->", e_tilde(nu, z, hp, conv))

# %%
print("depth", depth_by_descent(nu, hp))
