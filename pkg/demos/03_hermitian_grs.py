# %% [markdown]
# # Hermitian self-orthogonal GRS codes
#
# Choose column multipliers with `v_i^(q+1) = c_i` for a rational dual vector
# `c`. At low dimension the resulting GRS code lies inside its Hermitian dual.

# %%
from grs_hermes import FamilyParams, construct_family, hermitian_inner, tower_for
from grs_hermes.hermitian import unrepaired_code, is_hermitian_self_orthogonal

code = construct_family(FamilyParams("q2plus1", 2, 2))
print(code.gen)
t = code.tower
print("<g0,g1>_H =", hermitian_inner(t, code.gen[0], code.gen[1]))

# %% [markdown]
# ## Length q^2 + 1 below the top dimension
#
# With the point at infinity, `v^(q+1) = c` gives a self-orthogonal code only
# at `k = q`. Smaller `k` needs different multipliers:
#
# * `k <= q-2`: multiply by `h(a_i)` for a root-free monic `h` of degree `q-k`.
# * `k = q-1`: use weights `s + N(x) + Tr(lam * x^d)` that never vanish.

# %%
for k in (1, 2, 3):
    plain = unrepaired_code(FamilyParams("q2plus1", 3, k))
    fixed = construct_family(FamilyParams("q2plus1", 3, k))
    print(f"k = {k}: plain {is_hermitian_self_orthogonal(plain)}, "
          f"built {is_hermitian_self_orthogonal(fixed)}, recipe {fixed.family.get('recipe', 'direct')}")

# %% [markdown]
# ## Roots-of-unity lengths

# %%
for q, r, k in [(5, 2, 3), (8, 3, 5), (11, 4, 7)]:
    c = construct_family(FamilyParams("r_family", q, k, r=r))
    print(f"q = {q}, r = {r}: [{c.n},{c.k}] over GF({tower_for(q).order})")
