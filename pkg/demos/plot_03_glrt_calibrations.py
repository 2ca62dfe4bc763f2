"""
Calibrating the GLRT
====================

T' = -ln prod(1 - r_n) can be sampled exactly under the null as a sum of
log-beta variables. Three cheaper approximations of its quantiles are
compared against that exact sampler here.
"""

# %%
from improprietest.harness import ExperimentConfig, run_experiment

cfg = ExperimentConfig("glrt_pp", ((4, 10), (20, 100), (200, 1000)), replicates=50_000,
                       alphas=(0.01, 0.05))
t = run_experiment(cfg, write=False).columns

# %%
# Classical Bartlett is far off once N is not small relative to M; the
# shifted-gamma (adjusted Bartlett) fit holds up everywhere.
print("   N     M  alpha  lognormal  adj.Bartlett  Bartlett   +/-CI")
for i in range(len(t["n"])):
    print(f"{t['n'][i]:4d} {t['m'][i]:5d}  {t['alpha'][i]:.2f}   {t['far_lognormal'][i]:.4f}     "
          f"{t['far_adjusted_bartlett'][i]:.4f}     {t['far_bartlett'][i]:.4f}   {t['ci_halfwidth'][i]:.4f}")
