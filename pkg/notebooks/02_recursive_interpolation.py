# coding: utf-8

# # Interpolating from probes
#
# Each round finds a prime with few collisions, reads off the uncollided terms
# with a handful of extra probes of degree p*q, and subtracts what it found.

# %%
import numpy as np

from slpinterp import (InterpConfig, SparsePoly, ProbeLedger, dense_interpolate, garg_schost, interpolate,
                       random_sparse, slp_from_sparse, zero_test)
from slpinterp.ring import RingSpec

rng = np.random.default_rng(7)
T, D = 20, 2**30
f = random_sparse(rng, T, D)
s = slp_from_sparse(f)

out, led = interpolate(s, InterpConfig(T, D, mu=0.05, seed=3))
print(out == f, led.summary())

# %% [markdown]
# The ledger records every probe degree. The degree histogram shows the
# rounds: small primes p first, then p*q for each q in the moduli set.

# %%
degs = np.array(led.degrees)
print("smallest", degs.min(), "largest", degs.max(), "median", int(np.median(degs)))

# %% [markdown]
# ## Checking the answer
#
# The result is Monte Carlo. A deterministic zero test compares it with the
# program mod z^p - 1 over the first few primes.

# %%
print("verified", zero_test(s, out, T + out.sparsity(), D))
wrong = out - SparsePoly.monomial(out.ring, 5, 1)
print("bad candidate verified", zero_test(s, wrong, T + wrong.sparsity(), D))

# %% [markdown]
# ## Baselines
#
# Garg-Schost uses only good primes and rebuilds all exponents at once from the
# polynomial prod(y - e_i). Dense interpolation evaluates at D + 1 points.

# %%
g_led = ProbeLedger()
print("garg-schost", garg_schost(s, T, D, 0.05, np.random.default_rng(3), g_led) == f, g_led.summary())

small = RingSpec.zmod(2**31 - 1)
h = random_sparse(rng, 6, 3000, small)
d_led = ProbeLedger()
print("dense", dense_interpolate(slp_from_sparse(h), 3000, d_led) == h, d_led.summary())
