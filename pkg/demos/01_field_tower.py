# %% [markdown]
# # The field tower GF(p) < GF(q) < GF(q^2)
#
# Every element of GF(q^2) is a plain integer `low + q*high`, where `low`
# and `high` are GF(q) encodings. The encodings below `q` are exactly GF(q).

# %%
import numpy as np

from grs_hermes import tower_for

t = tower_for(2)
print("GF(4): top polynomial", t.top_poly, "generator", t.generator)
w = t.generator
print("w*w =", t.mul(w, w), " w + 1 =", t.add(w, 1))

# %% [markdown]
# ## Frobenius and norm
#
# `x -> x^q` fixes GF(q) and swaps conjugates; `x -> x^(q+1)` lands in GF(q).

# %%
t = tower_for(3)
el = t.elements()
fixed = el[t.frobenius(el) == el]
print("elements fixed by Frobenius in GF(9):", fixed.tolist())
print("norm fibre sizes:", np.bincount(t.norm(el)).tolist())

# %% [markdown]
# ## Solving v^(q+1) = c
#
# The smallest solution by encoding is returned. This is how column
# multipliers are chosen from a rational dual vector.

# %%
for c in range(1, t.q):
    v = t.solve_norm_equation(c)
    print(f"c = {c}: v = {v}, v^(q+1) = {t.power(v, t.q + 1)}")

# %%
big = tower_for(23)
print("GF(529): generator", big.generator, "top polynomial", big.top_poly)
