# coding: utf-8

# # Probing a straight-line program
#
# A straight-line program (SLP) is the only view we get of the polynomial.
# A probe runs it in R[z]/(z^l - 1), so every exponent is folded mod l.

# %%
import numpy as np

from slpinterp import DEFAULT_RING as R, SparsePoly, format_slp, probe, slp_from_sparse

f = SparsePoly.from_terms(R, [(33, 1), (3, 1)])
s = slp_from_sparse(f)
print(format_slp(s))

# %% [markdown]
# Mod z^5 - 1 both exponents land on 3 and the terms merge. Mod z^7 - 1 they stay apart.

# %%
for ell in (5, 7):
    print(ell, probe(s, ell).items())

# %% [markdown]
# ## Collisions
#
# C_g(p) counts the terms that share a residue class mod p with some other term.
# With s the sparsity of the image, t - s <= C_g(p) <= 2(t - s).

# %%
g = SparsePoly.from_terms(R, [(0, 1), (1, 1), (4, 1), (13, -2)])
for p in (2, 3, 5, 7):
    img = g.reduce_mod_cyclic(p)
    print(p, "image terms", img.sparsity(), "colliding", g.collision_count(p))

# %% [markdown]
# Picking the prime whose image has the most terms is a proxy for few collisions.
# It is not exact: above, p=2 keeps more terms than p=3 yet has more collisions.
#
# How often does a random prime near lam collide a lot? Count it directly.

# %%
from slpinterp import ok_prime_lambda
from slpinterp.primes import sieve

rng = np.random.default_rng(1)
T, D = 12, 10**4
exps = rng.choice(D + 1, size=T, replace=False)
g = SparsePoly.from_terms(R, [(int(e), 1) for e in exps])
lam = ok_prime_lambda(T, D)
ps = sieve(2 * lam).between(lam, 2 * lam)
counts = np.array([g.collision_count(int(p)) for p in ps])
print("lam", lam, "primes", len(ps), "max collisions", counts.max(),
      "fraction with 16C >= 3T", np.mean(16 * counts >= 3 * T))
