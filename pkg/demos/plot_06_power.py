"""
Which test to use
=================

The GLRT pools every coefficient, Roy's test looks only at the largest. When
impropriety is spread evenly the GLRT wins; when it sits in one direction Roy
wins.
"""

# %%
from improprietest.harness import ExperimentConfig, run_experiment


def show(name, regimes, grid):
    cfg = ExperimentConfig(name, regimes, replicates=200, alphas=(0.01,), lambda_sq=grid)
    t = run_experiment(cfg, write=False).columns
    print(name)
    for l2, g, r in zip(t["lambda_sq"], t["power_glrt"], t["power_roy"]):
        print(f"  lambda^2={l2:.2f}  GLRT {g:.3f}  Roy {r:.3f}")


show("equi_power", ((40, 100),), (0.02, 0.05, 0.1))
show("spike_power", ((40, 200),), (0.2, 0.35, 0.5))
