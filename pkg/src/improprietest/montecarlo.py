"""Seeded replicate fan-out.

Every replicate gets its own stream spawned from a master ``SeedSequence``
by replicate index, and results are gathered in index order, so the output
depends on the master seed only and not on the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, TypeVar

import numpy as np

from .augmented import AugmentedSample, sample_spectrum
from .nulls import sample_wilks_null

R = TypeVar("R")

CHUNK = 4096


def seed_sequence(seed) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    if isinstance(seed, np.random.Generator):
        return seed.bit_generator.seed_seq.spawn(1)[0]
    return np.random.SeedSequence(seed)


def replicate_map(
    fn: Callable[[int, np.random.Generator], R],
    count: int,
    seed,
    workers: int = 1,
) -> list[R]:
    """``[fn(i, rng_i) for i in range(count)]`` with independent per-index streams."""
    children = seed_sequence(seed).spawn(count)

    def run(i: int) -> R:
        return fn(i, np.random.default_rng(children[i]))

    if workers <= 1 or count < 2:
        return [run(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, range(count)))


def exact_null_draws(
    n_dim: int, m_obs: int, count: int, seed, workers: int = 1, n1: int | None = None
) -> np.ndarray:
    """Beta-product null draws of ``T'`` in fixed-size chunks, one stream per chunk."""
    sizes = [min(CHUNK, count - k) for k in range(0, count, CHUNK)]
    parts = replicate_map(
        lambda i, rng: sample_wilks_null(n_dim, m_obs, sizes[i], rng, n1=n1),
        len(sizes),
        seed,
        workers,
    )
    return np.concatenate(parts) if parts else np.empty(0)


def null_squared_spectra(n_dim: int, m_obs: int, count: int, seed, workers: int = 1) -> np.ndarray:
    """(count, N) squared sample coefficients from proper Gaussian data."""

    def one(_, rng):
        x = rng.standard_normal((m_obs, 2 * n_dim))
        return sample_spectrum(AugmentedSample(x)).squared

    rows = replicate_map(one, count, seed, workers)
    return np.array(rows).reshape(count, n_dim)


def binomial_ci_halfwidth(p: float, n: int, z: float = 1.959963984540054) -> float:
    return float(z * np.sqrt(max(p * (1.0 - p), 0.0) / n))
