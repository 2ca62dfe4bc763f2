"""
A single improper direction: detectable or not
==============================================

With one population coefficient lambda^2, the top sample coefficient only
leaves the null bulk once lambda^2 exceeds 1/(gamma - 1). Below that it sticks
to the bulk edge c.
"""

# %%
from improprietest.harness import ExperimentConfig, run_experiment

cfg = ExperimentConfig("spike_hist", ((100, 500),), replicates=100, lambda_sq=(0.1, 0.2, 0.3, 0.4, 0.7))
for row in run_experiment(cfg, write=False).summary:
    side = "above" if row["above_threshold"] else "below"
    print(f"lambda^2={row['lambda_sq']:.2f} ({side} {row['rho_c']:.2f})  mean r1 {row['mean_r1']:.4f}"
          f"  predicted {row['rho_bar']:.4f}")
