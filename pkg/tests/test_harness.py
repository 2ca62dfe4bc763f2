import json
from dataclasses import replace

import numpy as np
import pytest

from improprietest.harness import (
    EXPERIMENTS,
    ExperimentConfig,
    ResultTable,
    default_config,
    load_config,
    run_experiment,
)

SMALL = {
    "null_spectrum_hist": dict(regimes=((5, 20),), replicates=20, bins=10),
    "glrt_pp": dict(regimes=((4, 10), (5, 25)), replicates=5000, alphas=(0.01, 0.05)),
    "roy_pp": dict(regimes=((5, 20),), replicates=300, alphas=(0.01, 0.05)),
    "equi_power": dict(regimes=((5, 20),), replicates=30, lambda_sq=(0.05, 0.3)),
    "spike_hist": dict(regimes=((5, 25),), replicates=30, lambda_sq=(0.1, 0.5), bins=10),
    "spike_power": dict(regimes=((5, 25),), replicates=30, lambda_sq=(0.1, 0.5)),
    "mixed_power": dict(regimes=((20, 50),), replicates=20, lambda_sq=(0.3,)),
    "cca_mismatch": dict(regimes=((5, 50),), replicates=300, bins=8),
}


def small_config(name, tmp_path, **kw):
    return replace(default_config(name), output_dir=str(tmp_path / name), **{**SMALL[name], **kw})


def _meta_without_time(path):
    meta = json.loads(path.read_text())
    meta.pop("wall_time_s")
    return meta


@pytest.mark.parametrize("name", list(EXPERIMENTS))
def test_experiment_deterministic_and_round_trips(name, tmp_path):
    cfg = small_config(name, tmp_path)
    first = run_experiment(cfg, workers=1)
    csv1 = (tmp_path / name / f"{name}.csv").read_bytes()
    meta1 = _meta_without_time(tmp_path / name / f"{name}.json")
    run_experiment(cfg, workers=3)
    assert (tmp_path / name / f"{name}.csv").read_bytes() == csv1
    assert _meta_without_time(tmp_path / name / f"{name}.json") == meta1
    loaded = ResultTable.load(tmp_path / name / f"{name}.csv")
    assert list(loaded.columns) == list(first.columns)
    for k, col in first.columns.items():
        if col.dtype.kind == "f":
            np.testing.assert_array_equal(loaded.columns[k], col)
    assert loaded.metadata["master_seed"] == cfg.master_seed
    assert loaded.metadata["config"] == json.loads(json.dumps(cfg.to_dict()))


def test_seed_changes_output(tmp_path):
    a = run_experiment(small_config("glrt_pp", tmp_path), write=False)
    b = run_experiment(small_config("glrt_pp", tmp_path, master_seed=1), write=False)
    assert not np.array_equal(a.columns["far_lognormal"], b.columns["far_lognormal"])


def test_load_rejects_tampering(tmp_path):
    cfg = small_config("glrt_pp", tmp_path)
    run_experiment(cfg)
    path = tmp_path / "glrt_pp" / "glrt_pp.csv"
    lines = path.read_text().splitlines()
    cells = lines[1].split(",")
    cells[4] = "nan"
    path.write_text("\n".join([lines[0], ",".join(cells)] + lines[2:]) + "\n")
    with pytest.raises(ValueError, match="non-finite"):
        ResultTable.load(path)
    meta = path.with_suffix(".json")
    m = json.loads(meta.read_text())
    m["schema_version"] = 7
    meta.write_text(json.dumps(m))
    with pytest.raises(ValueError, match="schema"):
        ResultTable.load(path)


def test_ragged_table_rejected():
    with pytest.raises(ValueError, match="ragged"):
        ResultTable({"a": [1, 2], "b": [1.0]})


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig("glrt_pp", ((10, 15),), 10)
    with pytest.raises(ValueError):
        ExperimentConfig("glrt_pp", ((10, 30),), 0)
    with pytest.raises(ValueError):
        ExperimentConfig("nope", ((10, 30),), 10)
    with pytest.raises(ValueError):
        ExperimentConfig("spike_power", ((10, 30),), 10, lambda_sq=(1.0,))
    with pytest.raises(ValueError, match="N = 20"):
        ExperimentConfig("mixed_power", ((10, 30),), 10, lambda_sq=(0.5,))
    cfg = ExperimentConfig("glrt_pp", ({"n": 10, "gamma": 2.5}, {"n": 4, "m": 10}), 10)
    assert cfg.regimes == ((10, 25), (4, 10))


def test_load_config_overrides(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"experiment": "roy_pp", "regimes": [[10, 30]], "replicates": 50}))
    cfg = load_config(p, master_seed=9, output_dir="elsewhere")
    assert cfg.regimes == ((10, 30),) and cfg.replicates == 50
    assert cfg.master_seed == 9 and cfg.output_dir == "elsewhere"
    assert cfg.alphas == default_config("roy_pp").alphas
    with pytest.raises(ValueError, match="asked to run"):
        load_config(p, "glrt_pp")
    p.write_text(json.dumps({"experiment": "roy_pp", "colour": "red"}))
    with pytest.raises(ValueError, match="unknown config keys"):
        load_config(p)


def test_default_configs_are_valid():
    for name in EXPERIMENTS:
        assert default_config(name).experiment == name


def test_null_hist_summary_sensible(tmp_path):
    t = run_experiment(small_config("null_spectrum_hist", tmp_path, regimes=((20, 100),), replicates=50), write=False)
    s = t.summary[0]
    assert s["mean"] == pytest.approx(0.2, abs=0.02)
    assert s["sup_distance"] < 0.05
    assert t.columns["count"].sum() == 20 * 50


def test_cca_summary_fields(tmp_path):
    t = run_experiment(small_config("cca_mismatch", tmp_path), write=False)
    s = t.summary[0]
    assert s["predicted_gap"] == pytest.approx(np.log(0.9))
    assert set(t.columns["ensemble"]) == {"cca_beta", "impropriety_beta", "cca_pipeline", "impropriety_pipeline"}
