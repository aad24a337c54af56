# %% [markdown]
# # Ideal chains and the simples killed by e

# %%
from aspherical.ideals import annihilated_simples, cherednik_chain, grass_chain
from aspherical.parameters import HyperplaneParams, enumerate_aspherical_hyperplanes

for lam in range(-4, 2):
    print(lam, len(grass_chain(1, 3, lam)))

# %%
hp = HyperplaneParams(2, 0, 1, 0, 1)
chain = cherednik_chain(hp, 6)
print(chain.to_json())
print([str(nu) for nu in annihilated_simples(hp, 6)])

# %% [markdown]
# Where the printed bound lets t run past q - 1 the two values of p split.

# %%
for hp in enumerate_aspherical_hyperplanes(2, 4):
    ch = cherednik_chain(hp, 4)
    if not ch.extra["remark_holds"]:
        print(hp, "q =", ch.extra["q"], "p_grass =", ch.p_grass, "p_stated =", ch.p_stated)
