# %% [markdown]
# # Rational dual vectors
#
# For distinct points `a_1..a_n`, the system `sum c_i a_i^j = 0` for
# `j < n-1` has a one-dimensional solution space. We care whether some
# solution has all coordinates in GF(q). There are two independent ways to
# decide it: read the normalised solution, or compare the coefficient matrix
# with its entrywise q-th power up to row operations.

# %%
import numpy as np

from grs_hermes import EvalSet, matrix_A, rationality_by_rowspace, roots_of_unity, solve_dual, tower_for

t = tower_for(2)
e = EvalSet(t, (0, 1, 2, 3))
print(matrix_A(e))
print("dual vector:", solve_dual(e))

# %% [markdown]
# ## Zero plus roots of unity is always rational

# %%
t = tower_for(5)
for m in (3, 4, 6, 8, 12, 24):
    e = EvalSet(t, roots_of_unity(t, m, with_zero=True))
    print(f"m = {m:2d}: rational = {solve_dual(e).rational}, row test = {rationality_by_rowspace(e)}")

# %% [markdown]
# ## A random sample: both criteria agree

# %%
rng = np.random.default_rng(1)
tally = {True: 0, False: 0}
for _ in range(300):
    pts = tuple(int(x) for x in rng.choice(t.order, int(rng.integers(2, 9)), replace=False))
    e = EvalSet(t, pts)
    flag = solve_dual(e).rational
    assert flag == rationality_by_rowspace(e)
    tally[flag] += 1
print("rational / not rational:", tally[True], "/", tally[False])
