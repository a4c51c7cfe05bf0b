# coding: utf-8

# # Probe cost across sparsity and degree
#
# results/table1_bench.csv was written by
#
#     slpinterp bench --T 4 16 64 --D 2^20 2^30 --trials 10 --seed 2024 --out results/table1_bench.csv
#
# Cost is the total probe degree, the sum of l over all probes.

# %%
from pathlib import Path

import numpy as np

from slpinterp.cli import read_bench_csv

here = Path(__file__).resolve().parent if "__file__" in globals() else Path.cwd()
rows = read_bench_csv((here.parent / "results" / "table1_bench.csv").read_text())
print(len(rows), "rows")

# %%
cells = {}
for r in rows:
    cells.setdefault((int(r["T"]), int(r["D"])), {}).setdefault(r["algorithm"], []).append(int(r["total_degree"]))

print(f"{'T':>3} {'log2 D':>6} {'recursive':>12} {'gargschost':>12} {'dense':>14}")
for (T, D), algos in sorted(cells.items()):
    m = {a: np.mean(v) for a, v in algos.items()}
    print(f"{T:>3} {D.bit_length() - 1:>6} {m['recursive']:>12.0f} {m['gargschost']:>12.0f} {m['dense']:>14.0f}")

# %% [markdown]
# Garg-Schost grows like T^2 in its prime size and the recursive method like T,
# so the recursive method only pulls ahead once T is large. At T = 64 it is
# cheaper at both degrees; at T = 16 the constants in its prime range still
# dominate. At D = 2^30 both are far below the D + 1 evaluations of dense
# interpolation; at D = 2^20 dense is already competitive once T >= 16.
#
# ## Several variables
#
# Kronecker substitution packs x^a y^b into z^(a + b(D+1)) and the univariate
# machinery does the rest.

# %%
from slpinterp import DEFAULT_RING as R, InterpConfig, interpolate_multivariate, slp_from_monomials

truth = [((0, 0), 5), ((3, 1), 2), ((60, 2), 9), ((1, 59), 4)]
s = slp_from_monomials(R, 2, truth)
got, led = interpolate_multivariate(s, InterpConfig(len(truth), 60))
print(got)
print(led.summary())
