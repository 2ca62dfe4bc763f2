"""
Where null coefficients land
============================

Under properness the squared sample coefficients do not shrink to zero when
N grows with M. They spread over [0, c] with c = 4(gamma - 1)/gamma^2,
gamma = M/N, following a fixed limiting density.
"""

# %%

from improprietest.harness import ExperimentConfig, run_experiment

cfg = ExperimentConfig("null_spectrum_hist", ((10, 50), (100, 500)), replicates=200, bins=20)
table = run_experiment(cfg, write=False)

# %%
# The sup-distance to the limit shrinks with N at fixed gamma = 5.
for row in table.summary:
    print(f"N={row['n']:4d}  sup-distance {row['sup_distance']:.4f}  mean {row['mean']:.4f} "
          f"(limit {row['theory_mean']:.4f})  edge c {row['edge_c']:.3f}, max r {row['max_r']:.3f}")

# %%
# Histogram density against the limiting density for N = 100, as text.
sel = table.columns["n"] == 100
for left, dens, pdf in zip(table.columns["bin_left"][sel], table.columns["density"][sel],
                           table.columns["bulk_pdf"][sel]):
    bar = "#" * int(round(10 * dens))
    print(f"{left:4.2f} {dens:5.2f} {pdf:5.2f} {bar}")
