"""
Roy's largest root and the Tracy-Widom law
==========================================

The logit of the largest squared coefficient, centred and scaled, follows the
GOE Tracy-Widom law F1 in the large-N limit. F1 is tabulated once from its
Fredholm-determinant form and shipped with the package.
"""

# %%
from improprietest import tw1_quantile
from improprietest.tracy_widom import fredholm_cdf

for p in (0.5, 0.9, 0.95, 0.99):
    q = float(tw1_quantile(p))
    print(f"F1^-1({p}) = {q:+.4f}   direct determinant at that point: {fredholm_cdf(q):.6f}")

# %%
# Empirical false-alarm rate of the Tracy-Widom calibration.
from improprietest.harness import ExperimentConfig, run_experiment

cfg = ExperimentConfig("roy_pp", ((10, 50), (50, 250)), replicates=2000, alphas=(0.01, 0.05))
t = run_experiment(cfg, write=False).columns
for n, a, far, ci in zip(t["n"], t["alpha"], t["far_tracy_widom"], t["ci_halfwidth"]):
    print(f"N={n:3d} alpha={a:.2f}  FAR {far:.4f} +/- {ci:.4f}")
