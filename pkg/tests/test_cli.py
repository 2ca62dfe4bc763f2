import json

import numpy as np

from improprietest.augmented import AugmentedSample
from improprietest.cli import main
from improprietest.dataio import write_csv
from improprietest.harness import EXPERIMENTS
from improprietest.models import ModelSpec, generate


def test_list_experiments(capsys):
    assert main(["run", "--list-experiments"]) == 0
    out = capsys.readouterr().out
    assert all(name in out for name in EXPERIMENTS)


def test_run_with_config(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"regimes": [{"n": 4, "m": 10}], "replicates": 2000, "alphas": [0.05]}))
    rc = main(["run", "glrt_pp", "--config", str(cfg), "--seed", "3", "--out", str(tmp_path / "o"), "--threads", "2"])
    assert rc == 0
    meta = json.loads((tmp_path / "o" / "glrt_pp.json").read_text())
    assert meta["master_seed"] == 3 and meta["config"]["replicates"] == 2000
    assert (tmp_path / "o" / "glrt_pp.csv").exists()


def test_run_bad_config_reports_error(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"regimes": [[10, 12]]}))
    assert main(["run", "glrt_pp", "--config", str(cfg), "--out", str(tmp_path)]) == 1
    assert "M >= 2N" in capsys.readouterr().err


def test_one_shot_test(tmp_path, capsys):
    s = generate(ModelSpec("spiked", 4, 200, 3.0), np.random.default_rng(0))
    path = write_csv(s, tmp_path / "d.csv", complex_columns=True)
    assert main(["test", "--input", str(path), "--statistic", "glrt", "--method", "adjusted-bartlett",
                 "--alpha", "0.01"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["method"] == "adjusted_bartlett" and rep["reject_h0"] and rep["n_dim"] == 4


def test_one_shot_null_data(tmp_path, capsys):
    s = AugmentedSample(np.random.default_rng(1).standard_normal((100, 6)))
    path = write_csv(s, tmp_path / "d.csv")
    assert main(["test", "--input", str(path), "--statistic", "roy", "--method", "exact-mc",
                 "--mc-count", "999"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["method"] == "exact_mc" and 0 < rep["p_value"] <= 1


def test_unknown_method_rejected(tmp_path, capsys):
    try:
        main(["test", "--input", "x.csv", "--method", "wald"])
    except SystemExit as exc:
        assert exc.code == 2
    else:
        raise AssertionError("argparse should exit")
