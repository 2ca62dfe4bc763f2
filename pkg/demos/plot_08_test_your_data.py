"""
Testing a data file
===================

A CSV with N complex columns (a+bi) or 2N real columns [Re, Im] is all the
command line needs:

    improprietest test --input data.csv --statistic glrt --method adjusted-bartlett --alpha 0.01

The same from Python follows.
"""

# %%
import tempfile
from pathlib import Path

import numpy as np

from improprietest import ModelSpec, RegimeParams, TestConfig, generate, run_test, sample_spectrum
from improprietest.dataio import load_csv, write_csv

rng = np.random.default_rng(3)
path = Path(tempfile.mkdtemp()) / "data.csv"
write_csv(generate(ModelSpec("spiked", 6, 300, theta=0.8), rng), path, complex_columns=True)
print(path.read_text().splitlines()[1][:80], "...")

# %%
sample = load_csv(path)
regime = RegimeParams(sample.n_dim, sample.m_obs)
for stat in ("glrt", "roy"):
    report = run_test(sample_spectrum(sample), TestConfig(0.01, stat), regime)
    print(report.to_json())
