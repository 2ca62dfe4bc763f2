"""Synthetic proper/improper Gaussian models with known impropriety coefficients.

Four variants:

* ``proper_null``: u, v i.i.d. standard normal.
* ``equi_correlated``: u = s + sqrt(theta) q, v = t + sqrt(theta) q, every
  coefficient equal to theta / (1 + theta).
* ``spiked``: rank-one common part sqrt(theta) w phi in both u and v, a single
  coefficient theta / (1 + theta).
* ``mixed_pca``: v = t + sqrt(2 theta) w with w having independent components
  of variances p_k, coefficients theta p_k / (1 + theta p_k).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from .augmented import AugmentedCovariance, AugmentedSample

__all__ = [
    "ModelSpec",
    "PopulationTruth",
    "DEFAULT_MIXED_FRACTIONS",
    "generate",
    "population_covariance",
    "population_truth",
    "theta_for_lambda",
    "random_unit_vector",
]

Variant = Literal["proper_null", "equi_correlated", "spiked", "mixed_pca"]
VARIANTS = ("proper_null", "equi_correlated", "spiked", "mixed_pca")

# explained-variance fractions for N = 20: five strong, five weak, ten zero
DEFAULT_MIXED_FRACTIONS = (0.5, 0.2, 0.1, 0.1, 0.05) + (0.01,) * 5 + (0.0,) * 10


@dataclass(frozen=True)
class ModelSpec:
    variant: Variant
    n_dim: int
    m_obs: int
    theta: float = 0.0
    direction: Optional[np.ndarray] = field(default=None, compare=False)
    fractions: Optional[tuple[float, ...]] = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown model variant {self.variant!r}")
        if self.n_dim < 1 or self.m_obs < 1:
            raise ValueError("N and M must be positive")
        if self.variant != "proper_null" and not self.theta > 0:
            raise ValueError(f"theta must be positive for {self.variant}, got {self.theta}")
        if self.variant == "spiked":
            phi = np.zeros(self.n_dim) if self.direction is None else np.asarray(self.direction, float)
            if self.direction is None:
                phi[0] = 1.0
            if phi.shape != (self.n_dim,) or abs(np.linalg.norm(phi) - 1.0) > 1e-12:
                raise ValueError("spike direction must be a unit vector of length N")
            object.__setattr__(self, "direction", phi)
        if self.variant == "mixed_pca":
            p = np.asarray(self.fractions if self.fractions is not None else (), float)
            if p.shape != (self.n_dim,):
                raise ValueError("mixed_pca needs N explained-variance fractions")
            if np.any(p < 0) or np.any(np.diff(p) > 0) or abs(p.sum() - 1.0) > 1e-12:
                raise ValueError("fractions must be nonnegative, nonincreasing and sum to 1")
            object.__setattr__(self, "fractions", tuple(float(x) for x in p))

    def with_theta(self, theta: float) -> "ModelSpec":
        return ModelSpec(self.variant, self.n_dim, self.m_obs, theta, self.direction, self.fractions)


@dataclass(frozen=True)
class PopulationTruth:
    lambdas: np.ndarray

    @property
    def lambda_sq(self) -> np.ndarray:
        return self.lambdas**2


def random_unit_vector(n_dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(n_dim)
    return v / np.linalg.norm(v)


def generate(spec: ModelSpec, rng: np.random.Generator) -> AugmentedSample:
    """Draw M i.i.d. rows ``[u, v]`` from the model."""
    n, m = spec.n_dim, spec.m_obs
    x = rng.standard_normal((m, 2 * n))
    if spec.variant == "equi_correlated":
        common = np.sqrt(spec.theta) * rng.standard_normal((m, n))
        x[:, :n] += common
        x[:, n:] += common
    elif spec.variant == "spiked":
        common = np.sqrt(spec.theta) * np.outer(rng.standard_normal(m), spec.direction)
        x[:, :n] += common
        x[:, n:] += common
    elif spec.variant == "mixed_pca":
        sd = np.sqrt(np.asarray(spec.fractions))
        x[:, n:] += np.sqrt(2.0 * spec.theta) * rng.standard_normal((m, n)) * sd
    return AugmentedSample(x)


def population_covariance(spec: ModelSpec) -> AugmentedCovariance:
    n, theta = spec.n_dim, spec.theta
    eye = np.eye(n)
    if spec.variant == "proper_null":
        return AugmentedCovariance.from_blocks(eye, np.zeros((n, n)), eye)
    if spec.variant == "equi_correlated":
        return AugmentedCovariance.from_blocks((1 + theta) * eye, theta * eye, (1 + theta) * eye)
    if spec.variant == "spiked":
        pp = theta * np.outer(spec.direction, spec.direction)
        return AugmentedCovariance.from_blocks(eye + pp, pp, eye + pp)
    p = np.asarray(spec.fractions)
    return AugmentedCovariance.from_blocks(eye, np.zeros((n, n)), eye + 2 * theta * np.diag(p))


def population_truth(spec: ModelSpec) -> PopulationTruth:
    """Closed-form coefficients, sorted descending."""
    n, theta = spec.n_dim, spec.theta
    lam = np.zeros(n)
    if spec.variant == "equi_correlated":
        lam[:] = theta / (1 + theta)
    elif spec.variant == "spiked":
        lam[0] = theta / (1 + theta)
    elif spec.variant == "mixed_pca":
        tp = theta * np.asarray(spec.fractions)
        lam = np.sort(tp / (1 + tp))[::-1]
    return PopulationTruth(lam)


def theta_for_lambda(target_lambda_sq: float, variant: Variant, fractions=None) -> float:
    """Model strength giving a largest squared coefficient of ``target_lambda_sq``."""
    if not 0.0 < target_lambda_sq < 1.0 or target_lambda_sq > 1.0 - 1e-9:
        raise ValueError(f"target lambda^2 must lie in (0, 1 - 1e-9], got {target_lambda_sq}")
    lam = np.sqrt(target_lambda_sq)
    theta = lam / (1.0 - lam)
    if variant == "mixed_pca":
        if fractions is None:
            raise ValueError("mixed_pca needs the explained-variance fractions")
        theta /= float(np.max(fractions))
    elif variant not in ("equi_correlated", "spiked"):
        raise ValueError(f"no strength parameter for variant {variant!r}")
    return float(theta)
