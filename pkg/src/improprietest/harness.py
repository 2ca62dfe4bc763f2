"""Seeded Monte-Carlo experiments for the impropriety tests, emitted as tables.

Each ``run_*`` function takes an :class:`ExperimentConfig` and returns a
:class:`ResultTable`; :func:`run_experiment` dispatches by name and writes
``<experiment>.csv`` plus a ``<experiment>.json`` metadata sidecar.

Randomness: every (regime, grid point, ensemble) cell gets its own
``SeedSequence([master_seed, experiment_id, i, j, k])`` and inside a cell
each replicate gets a stream spawned by index, so tables depend on the
master seed only, not on ``workers``.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

import numpy as np

from . import __version__, nulls
from .augmented import AugmentedSample, glrt_statistic, roy_statistic, sample_spectrum
from .hypothesis_tests import TestConfig, calibrate
from .models import DEFAULT_MIXED_FRACTIONS, ModelSpec, generate, theta_for_lambda
from .montecarlo import binomial_ci_halfwidth, exact_null_draws, null_squared_spectra, replicate_map
from .nulls import BulkLaw, RegimeParams, SpikeMap
from .tracy_widom import tw1_pdf

__all__ = [
    "EXPERIMENTS",
    "ExperimentConfig",
    "ResultTable",
    "default_config",
    "load_config",
    "run_experiment",
    "run_null_spectrum_hist",
    "run_pp",
    "run_power_curve",
    "run_spike_hist",
    "run_cca_mismatch",
]

TABLE_SCHEMA_VERSION = 1

EXPERIMENTS = {
    "null_spectrum_hist": "histogram of null squared coefficients vs the limiting bulk density",
    "glrt_pp": "false-alarm rate of the three GLRT calibrations vs nominal level",
    "roy_pp": "false-alarm rate of the Tracy-Widom Roy calibration vs nominal level",
    "equi_power": "power of GLRT and Roy under the equi-correlated model",
    "spike_hist": "squared coefficients under the spiked model, edge and spike limits",
    "spike_power": "power of GLRT and Roy under the spiked model",
    "mixed_power": "power of GLRT and Roy under the mixed PCA model",
    "cca_mismatch": "null GLRT/Roy statistics for real CCA vs impropriety ensembles",
}
_EXPERIMENT_ID = {name: i for i, name in enumerate(EXPERIMENTS)}


# ---------------------------------------------------------------- config


def _regime_pair(entry) -> tuple[int, int]:
    if isinstance(entry, dict):
        n = int(entry["n"])
        if "m" in entry:
            return n, int(entry["m"])
        return n, int(round(n * float(entry["gamma"])))
    n, m = entry
    return int(n), int(m)


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    regimes: tuple[tuple[int, int], ...]
    replicates: int
    alphas: tuple[float, ...] = (0.01,)
    master_seed: int = 0
    output_dir: str = "results"
    lambda_sq: tuple[float, ...] = ()
    bins: int = 100
    fractions: Optional[tuple[float, ...]] = None

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"unknown experiment {self.experiment!r}; see --list-experiments")
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        regimes = tuple(_regime_pair(r) for r in self.regimes)
        for n, m in regimes:
            if n < 1 or m < 2 * n:
                raise ValueError(f"regime (N={n}, M={m}) violates M >= 2N")
        object.__setattr__(self, "regimes", regimes)
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "lambda_sq", tuple(float(x) for x in self.lambda_sq))
        if any(not 0.0 < a < 1.0 for a in self.alphas):
            raise ValueError("alphas must lie in (0, 1)")
        if any(not 0.0 < x < 1.0 for x in self.lambda_sq):
            raise ValueError("lambda_sq grid must lie inside (0, 1)")
        if not 0 <= int(self.master_seed) < 2**64:
            raise ValueError("master_seed must be a 64-bit unsigned integer")
        if self.fractions is not None:
            object.__setattr__(self, "fractions", tuple(float(p) for p in self.fractions))
        if self.experiment == "mixed_power":
            k = len(self.fractions or DEFAULT_MIXED_FRACTIONS)
            if any(n != k for n, _ in regimes):
                raise ValueError(f"mixed_power has {k} explained-variance fractions; every regime needs N = {k}")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["regimes"] = [list(r) for r in self.regimes]
        return d


def _gamma_grid(n: int, gammas: Sequence[float]) -> tuple[tuple[int, int], ...]:
    return tuple((n, int(round(n * g))) for g in gammas)


def _pp_alphas() -> tuple[float, ...]:
    return tuple(round(0.001 * k, 3) for k in range(1, 51))


def default_config(experiment: str) -> ExperimentConfig:
    """Desk-scale defaults: 1000 replicates for histograms and power, 10^5 for GLRT p-p tables."""
    if experiment == "null_spectrum_hist":
        regimes = _gamma_grid(10, (2, 2.5, 5, 10)) + _gamma_grid(100, (2, 2.5, 5, 10))
        return ExperimentConfig(experiment, regimes, 1000)
    if experiment == "glrt_pp":
        regimes = ((4, 10), (40, 100), (400, 1000), (2, 10), (20, 100), (200, 1000))
        return ExperimentConfig(experiment, regimes, 100_000, _pp_alphas())
    if experiment == "roy_pp":
        regimes = _gamma_grid(10, (2.5, 5, 10)) + _gamma_grid(100, (2.5, 5, 10))
        return ExperimentConfig(experiment, regimes, 10_000, _pp_alphas())
    if experiment == "equi_power":
        grid = (0.005, 0.01, 0.02, 0.03, 0.05, 0.1, 0.2, 0.4)
        return ExperimentConfig(experiment, _gamma_grid(100, (2.5, 5, 10)), 1000, (0.01,), lambda_sq=grid)
    if experiment == "spike_hist":
        return ExperimentConfig(experiment, ((100, 500),), 1000, lambda_sq=(0.1, 0.4, 0.7, 0.95))
    if experiment == "spike_power":
        grid = (0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.5, 0.6, 0.7, 0.8)
        return ExperimentConfig(experiment, _gamma_grid(100, (2.5, 5, 10)), 1000, (0.01,), lambda_sq=grid)
    if experiment == "mixed_power":
        grid = (0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
        return ExperimentConfig(
            experiment, _gamma_grid(20, (2.5, 5, 10, 20)), 1000, (0.01,), lambda_sq=grid,
            fractions=DEFAULT_MIXED_FRACTIONS,
        )
    if experiment == "cca_mismatch":
        return ExperimentConfig(experiment, ((50, 500),), 10_000, bins=60)
    raise ValueError(f"unknown experiment {experiment!r}")


def load_config(path, experiment: Optional[str] = None, **overrides) -> ExperimentConfig:
    """Read a JSON config; keys absent from the file fall back to the experiment defaults.

    Recognised keys: ``experiment``, ``regimes`` (list of ``[N, M]`` or
    ``{"n": N, "m": M}`` / ``{"n": N, "gamma": g}``), ``replicates``,
    ``alphas``, ``master_seed``, ``output_dir``, ``lambda_sq``, ``bins``,
    ``fractions``. ``overrides`` (from CLI flags) win over the file.
    """
    raw: dict[str, Any] = {}
    if path is not None:
        with open(path) as fh:
            raw = json.load(fh)
    name = experiment or raw.get("experiment")
    if name is None:
        raise ValueError("experiment name missing from config and command line")
    if raw.get("experiment") not in (None, name):
        raise ValueError(f"config is for {raw['experiment']!r}, asked to run {name!r}")
    unknown = set(raw) - {f for f in ExperimentConfig.__dataclass_fields__}
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    base = default_config(name).to_dict()
    base.update({k: v for k, v in raw.items() if k != "experiment"})
    base.update({k: v for k, v in overrides.items() if v is not None})
    base["experiment"] = name
    for key in ("regimes", "alphas", "lambda_sq"):
        base[key] = tuple(tuple(r) if isinstance(r, list) else r for r in base[key])
    return ExperimentConfig(**base)


# ---------------------------------------------------------------- tables


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def _check_finite(name: str, values) -> None:
    arr = np.asarray(values)
    if arr.dtype.kind in "fc" and not np.all(np.isfinite(arr)):
        raise ValueError(f"column {name!r} has non-finite cells")


@dataclass
class ResultTable:
    """Named columns of equal length plus a JSON-able metadata block."""

    columns: dict[str, np.ndarray]
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.columns = {k: np.asarray(v) for k, v in self.columns.items()}
        self.validate()

    def validate(self) -> None:
        lengths = {v.shape[0] for v in self.columns.values()}
        if len(lengths) > 1:
            raise ValueError(f"ragged table: column lengths {sorted(lengths)}")
        for name, col in self.columns.items():
            _check_finite(name, col)
        for row in self.metadata.get("summary", []):
            for k, v in row.items():
                if isinstance(v, float) and not math.isfinite(v):
                    raise ValueError(f"summary field {k!r} is not finite")

    def __len__(self) -> int:
        return next(iter(self.columns.values())).shape[0] if self.columns else 0

    @property
    def summary(self) -> list[dict]:
        return self.metadata.get("summary", [])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        names = list(self.columns)
        w.writerow(names)
        for i in range(len(self)):
            w.writerow([_fmt(self.columns[n][i]) for n in names])
        return buf.getvalue()

    def write(self, out_dir, stem: str) -> tuple[Path, Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        csv_path, meta_path = out / f"{stem}.csv", out / f"{stem}.json"
        csv_path.write_text(self.to_csv())
        meta = dict(self.metadata, schema_version=TABLE_SCHEMA_VERSION, columns=list(self.columns))
        meta_path.write_text(json.dumps(meta, indent=2, sort_keys=True, default=_json_default) + "\n")
        return csv_path, meta_path

    @classmethod
    def load(cls, csv_path) -> "ResultTable":
        """Read a table and its sidecar back, re-running every invariant check."""
        csv_path = Path(csv_path)
        meta = json.loads(csv_path.with_suffix(".json").read_text())
        if meta.get("schema_version") != TABLE_SCHEMA_VERSION:
            raise ValueError(f"unsupported table schema {meta.get('schema_version')!r}")
        with open(csv_path, newline="") as fh:
            rows = list(csv.reader(fh))
        names = rows[0]
        if names != meta.get("columns"):
            raise ValueError("CSV header does not match the metadata column list")
        cols: dict[str, np.ndarray] = {}
        for j, name in enumerate(names):
            cells = [r[j] for r in rows[1:]]
            try:
                cols[name] = np.array([int(c) for c in cells])
            except ValueError:
                try:
                    cols[name] = np.array([float(c) for c in cells])
                except ValueError:
                    cols[name] = np.array(cells)
        return cls(cols, meta)


def _json_default(o):
    if isinstance(o, np.generic):
        return o.item()
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"cannot serialise {type(o).__name__}")


def _metadata(config: ExperimentConfig, started: float, summary: list[dict], **extra) -> dict:
    return {
        "experiment": config.experiment,
        "description": EXPERIMENTS[config.experiment],
        "config": config.to_dict(),
        "master_seed": int(config.master_seed),
        "library_version": __version__,
        "wall_time_s": round(time.perf_counter() - started, 3),
        "summary": summary,
        **extra,
    }


def _seed(config: ExperimentConfig, *idx: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(config.master_seed), _EXPERIMENT_ID[config.experiment], *idx])


def _columns(rows: list[dict]) -> dict[str, list]:
    return {k: [r[k] for r in rows] for k in rows[0]} if rows else {}


# ---------------------------------------------------------------- experiments


def ks_distance_to_bulk(values: np.ndarray, law: BulkLaw) -> float:
    """Sup distance between the empirical CDF of ``values`` and the bulk CDF."""
    v = np.sort(np.clip(values, 0.0, 1.0))
    n = v.size
    f = nulls.bulk_cdf(law, v)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - f), np.max(f - (i - 1) / n)))


def run_null_spectrum_hist(config: ExperimentConfig, workers: int = 1) -> ResultTable:
    started = time.perf_counter()
    edges = np.linspace(0.0, 1.0, config.bins + 1)
    rows, summary = [], []
    for i, (n, m) in enumerate(config.regimes):
        r = null_squared_spectra(n, m, config.replicates, _seed(config, i), workers).ravel()
        law = BulkLaw(m / n)
        counts, _ = np.histogram(r, bins=edges)
        centers = 0.5 * (edges[:-1] + edges[1:])
        width = np.diff(edges)
        pdf = nulls.bulk_pdf(law, centers)
        for k in range(config.bins):
            rows.append({
                "n": n, "m": m, "gamma": m / n,
                "bin_left": edges[k], "bin_right": edges[k + 1], "bin_width": width[k],
                "count": int(counts[k]), "density": counts[k] / (r.size * width[k]),
                "bulk_pdf": pdf[k],
            })
        moments = nulls.bulk_moments(law)
        summary.append({
            "n": n, "m": m, "gamma": m / n, "edge_c": law.edge_c,
            "sup_distance": ks_distance_to_bulk(r, law),
            "mean": float(r.mean()), "variance": float(r.var()),
            "theory_mean": moments["mean"], "theory_variance": moments["variance"],
            "max_r": float(r.max()), "pooled_count": int(r.size),
        })
    return ResultTable(_columns(rows), _metadata(config, started, summary))


def run_pp(config: ExperimentConfig, statistic: Optional[str] = None, workers: int = 1) -> ResultTable:
    """Empirical exceedance of each calibration's 1 - alpha quantile under the exact null.

    GLRT replicates come from the beta-product sampler; Roy replicates need
    the full eigenvalue pipeline.
    """
    started = time.perf_counter()
    statistic = statistic or ("roy" if config.experiment == "roy_pp" else "glrt")
    methods = ("lognormal", "adjusted_bartlett", "bartlett") if statistic == "glrt" else ("tracy_widom",)
    rows = []
    for i, (n, m) in enumerate(config.regimes):
        regime = RegimeParams(n, m)
        if statistic == "glrt":
            draws = exact_null_draws(n, m, config.replicates, _seed(config, i), workers)
        else:
            r1 = null_squared_spectra(n, m, config.replicates, _seed(config, i), workers)[:, 0]
            draws = np.log(r1) - np.log1p(-r1)
        for a in config.alphas:
            row = {"n": n, "m": m, "gamma": m / n, "alpha": a}
            for meth in methods:
                cal = calibrate(TestConfig(a, statistic, meth), regime)
                row[f"far_{meth}"] = float(np.mean(draws > cal.threshold))
            row["ci_halfwidth"] = binomial_ci_halfwidth(a, draws.size)
            rows.append(row)
    return ResultTable(_columns(rows), _metadata(config, started, [], statistic=statistic))


_POWER_VARIANT = {"equi_power": "equi_correlated", "spike_power": "spiked", "mixed_power": "mixed_pca"}


def _both_statistics(spec: ModelSpec) -> Callable[[int, np.random.Generator], tuple[float, float]]:
    def one(_, rng):
        s = sample_spectrum(generate(spec, rng))
        return glrt_statistic(s).T_prime, roy_statistic(s).W

    return one


def run_power_curve(config: ExperimentConfig, workers: int = 1) -> ResultTable:
    """Power of both tests on a lambda^2 grid; both see the same replicates."""
    started = time.perf_counter()
    variant = _POWER_VARIANT[config.experiment]
    fractions = config.fractions or (DEFAULT_MIXED_FRACTIONS if variant == "mixed_pca" else None)
    rows = []
    for i, (n, m) in enumerate(config.regimes):
        regime = RegimeParams(n, m)
        for a_idx, alpha in enumerate(config.alphas):
            cal_g = calibrate(TestConfig(alpha, "glrt"), regime)
            cal_r = calibrate(TestConfig(alpha, "roy"), regime)
            for j, l2 in enumerate(config.lambda_sq):
                theta = theta_for_lambda(l2, variant, fractions)
                spec = ModelSpec(variant, n, m, theta, fractions=fractions if variant == "mixed_pca" else None)
                stats = np.array(
                    replicate_map(_both_statistics(spec), config.replicates, _seed(config, i, a_idx, j), workers)
                )
                pg = float(np.mean([cal_g.rejects(v) for v in stats[:, 0]]))
                pr = float(np.mean([cal_r.rejects(v) for v in stats[:, 1]]))
                row = {
                    "variant": variant, "n": n, "m": m, "gamma": m / n, "alpha": alpha,
                    "lambda_sq": l2, "theta": theta,
                    "power_glrt": pg, "ci_glrt": binomial_ci_halfwidth(pg, config.replicates),
                    "power_roy": pr, "ci_roy": binomial_ci_halfwidth(pr, config.replicates),
                    "method_glrt": cal_g.method, "method_roy": cal_r.method,
                }
                if variant != "equi_correlated":
                    row["rho_c"] = SpikeMap(m / n).rho_c
                rows.append(row)
    return ResultTable(_columns(rows), _metadata(config, started, []))


def run_spike_hist(config: ExperimentConfig, workers: int = 1) -> ResultTable:
    started = time.perf_counter()
    edges = np.linspace(0.0, 1.0, config.bins + 1)
    rows, summary = [], []
    for i, (n, m) in enumerate(config.regimes):
        smap, law = SpikeMap(m / n), BulkLaw(m / n)
        c = law.edge_c
        for j, l2 in enumerate(config.lambda_sq):
            spec = ModelSpec("spiked", n, m, theta_for_lambda(l2, "spiked"))
            spectra = np.array(replicate_map(
                lambda _, rng: sample_spectrum(generate(spec, rng)).squared,
                config.replicates, _seed(config, i, j), workers,
            ))
            counts, _ = np.histogram(spectra.ravel(), bins=edges)
            above, _ = np.histogram(spectra.ravel()[spectra.ravel() > c], bins=edges)
            centers = 0.5 * (edges[:-1] + edges[1:])
            pdf = nulls.bulk_pdf(law, centers)
            for k in range(config.bins):
                rows.append({
                    "n": n, "m": m, "gamma": m / n, "lambda_sq": l2,
                    "bin_left": edges[k], "bin_right": edges[k + 1], "bin_width": edges[k + 1] - edges[k],
                    "count": int(counts[k]), "count_above_edge": int(above[k]), "bulk_pdf": pdf[k],
                })
            r1 = spectra[:, 0]
            limit = nulls.spike_map(smap, l2)
            summary.append({
                "n": n, "m": m, "gamma": m / n, "lambda_sq": l2, "edge_c": c, "rho_c": smap.rho_c,
                "above_threshold": limit["above_threshold"], "rho_bar": limit["limit"],
                "mean_r1": float(r1.mean()), "sd_r1": float(r1.std(ddof=1)),
                "mean_count_above_edge": float(np.mean(np.sum(spectra > c, axis=1))),
                "frac_r1_above_edge_plus_0.05": float(np.mean(r1 > c + 0.05)),
            })
    return ResultTable(_columns(rows), _metadata(config, started, summary))


def _real_cca_null(n: int, m: int) -> Callable[[int, np.random.Generator], tuple[float, float]]:
    # squared canonical correlations of two independent real N-vectors, zero-mean sample moments
    def one(_, rng):
        x = rng.standard_normal((m, n))
        y = rng.standard_normal((m, n))
        qx, _ = np.linalg.qr(x)
        qy, _ = np.linalg.qr(y)
        rho = np.clip(np.linalg.svd(qx.T @ qy, compute_uv=False), 0.0, 1.0) ** 2
        return -float(np.sum(np.log1p(-rho))), float(np.log(rho[0]) - np.log1p(-rho[0]))

    return one


def _impropriety_null(n: int, m: int) -> Callable[[int, np.random.Generator], tuple[float, float]]:
    def one(_, rng):
        s = sample_spectrum(AugmentedSample(rng.standard_normal((m, 2 * n))))
        return glrt_statistic(s).T_prime, roy_statistic(s).W

    return one


def run_cca_mismatch(config: ExperimentConfig, workers: int = 1) -> ResultTable:
    """Null ensembles for real independent CCA and for impropriety, against the impropriety limits.

    Ensembles: ``cca_beta`` and ``impropriety_beta`` (beta-product GLRT with
    n1 = N and n1 = N + 1), ``cca_pipeline`` (canonical correlations of two
    independent real Gaussian samples) and ``impropriety_pipeline`` (full
    Gamma-matrix pipeline on proper data). Pipeline ensembles also give Roy's W.
    """
    started = time.perf_counter()
    rows, summary = [], []
    for i, (n, m) in enumerate(config.regimes):
        regime = RegimeParams(n, m)
        gp = nulls.glrt_clt_params(regime)
        rp = nulls.roy_params(n, m)
        reps = config.replicates
        glrt = {
            "cca_beta": exact_null_draws(n, m, reps, _seed(config, i, 0), workers, n1=n),
            "impropriety_beta": exact_null_draws(n, m, reps, _seed(config, i, 1), workers),
        }
        roy = {}
        for k, (name, fn) in enumerate((("cca_pipeline", _real_cca_null(n, m)),
                                        ("impropriety_pipeline", _impropriety_null(n, m))), start=2):
            pair = np.array(replicate_map(fn, reps, _seed(config, i, k), workers))
            glrt[name], roy[name] = pair[:, 0], pair[:, 1]

        def hist(stat: str, name: str, values: np.ndarray, lo: float, hi: float, pdf) -> None:
            edges = np.linspace(lo, hi, config.bins + 1)
            counts, _ = np.histogram(values, bins=edges)
            centers = 0.5 * (edges[:-1] + edges[1:])
            limit = pdf(centers)
            for b in range(config.bins):
                rows.append({
                    "n": n, "m": m, "statistic": stat, "ensemble": name,
                    "bin_left": edges[b], "bin_right": edges[b + 1], "count": int(counts[b]),
                    "density": counts[b] / (values.size * (edges[b + 1] - edges[b])),
                    "limit_pdf": limit[b],
                })

        all_t = np.concatenate(list(glrt.values()))
        lo, hi = np.quantile(all_t, [0.0005, 0.9995])
        normal_pdf = lambda t: np.exp(-0.5 * ((t - gp.m) / gp.s) ** 2) / (gp.s * np.sqrt(2 * np.pi))
        for name, vals in glrt.items():
            hist("glrt", name, vals, lo, hi, normal_pdf)
        all_w = np.concatenate(list(roy.values()))
        lo, hi = np.quantile(all_w, [0.0005, 0.9995])
        tw_pdf = lambda w: tw1_pdf((w - rp.mu) / rp.sigma) / rp.sigma
        for name, vals in roy.items():
            hist("roy", name, vals, lo, hi, tw_pdf)

        a, b = glrt["cca_beta"], glrt["impropriety_beta"]
        gap = float(a.mean() - b.mean())
        se = float(np.sqrt(a.var(ddof=1) / a.size + b.var(ddof=1) / b.size))
        g = m / n
        summary.append({
            "n": n, "m": m, "gamma": g, "limit_mean_m": gp.m, "limit_mean_cca": nulls.cca_offset_mean(gp),
            "predicted_gap": math.log((g - 1) / g), "mean_gap_beta": gap, "gap_se": se,
            "gap_z": (gap - math.log((g - 1) / g)) / se,
            **{f"mean_glrt_{k}": float(v.mean()) for k, v in glrt.items()},
            **{f"mean_roy_{k}": float(v.mean()) for k, v in roy.items()},
            "roy_mu": rp.mu, "roy_sigma": rp.sigma,
        })
    return ResultTable(_columns(rows), _metadata(config, started, summary))


_RUNNERS: dict[str, Callable[..., ResultTable]] = {
    "null_spectrum_hist": run_null_spectrum_hist,
    "glrt_pp": run_pp,
    "roy_pp": run_pp,
    "equi_power": run_power_curve,
    "spike_power": run_power_curve,
    "mixed_power": run_power_curve,
    "spike_hist": run_spike_hist,
    "cca_mismatch": run_cca_mismatch,
}


def run_experiment(config: ExperimentConfig, workers: int = 1, write: bool = True) -> ResultTable:
    table = _RUNNERS[config.experiment](config, workers=workers)
    if write:
        table.write(config.output_dir, config.experiment)
    return table
