"""Null distributions of the impropriety statistics.

Covers the limiting bulk law of the squared coefficients, the exact
beta-product representation of the GLRT statistic, three GLRT calibrations
(normal CLT, shifted gamma, Bartlett chi-square), the Tracy-Widom edge
calibration of Roy's logit statistic and the spike phase-transition map.

All asymptotic formulas are evaluated at the finite-sample ratio
``gamma = M / N``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy import integrate, special

from .tracy_widom import tw1_cdf, tw1_quantile

__all__ = [
    "RegimeParams",
    "BulkLaw",
    "GlrtNullParams",
    "RoyNullParams",
    "SpikeMap",
    "bulk_pdf",
    "bulk_cdf",
    "bulk_moments",
    "sample_wilks_null",
    "glrt_clt_params",
    "glrt_null_cdf",
    "glrt_null_quantile",
    "glrt_null_sf",
    "exact_glrt_moments",
    "roy_params",
    "roy_null_cdf",
    "roy_null_quantile",
    "spike_map",
    "cca_offset_mean",
    "GLRT_METHODS",
]

GlrtMethod = Literal["lognormal", "adjusted_bartlett", "bartlett"]
GLRT_METHODS = ("lognormal", "adjusted_bartlett", "bartlett")

QUAD_TOL = 1e-8


@dataclass(frozen=True)
class RegimeParams:
    n_dim: int
    m_obs: int

    def __post_init__(self):
        if self.n_dim < 1 or self.m_obs < 1:
            raise ValueError(f"N and M must be positive, got N={self.n_dim}, M={self.m_obs}")

    @property
    def gamma(self) -> float:
        return self.m_obs / self.n_dim


@dataclass(frozen=True)
class BulkLaw:
    """Limiting law of the unordered squared coefficients under properness."""

    gamma: float

    def __post_init__(self):
        if not self.gamma >= 2.0:
            raise ValueError(f"bulk law needs gamma >= 2, got {self.gamma}")

    @property
    def edge_c(self) -> float:
        g = self.gamma
        return 4.0 * (g - 1.0) / g**2


@dataclass(frozen=True)
class GlrtNullParams:
    m: float
    s: float
    q: float
    p: float
    alpha_shift: float
    n_dim: int
    m_obs: int


@dataclass(frozen=True)
class RoyNullParams:
    psi: float
    phi: float
    mu: float
    sigma: float
    near_degenerate: bool = False


@dataclass(frozen=True)
class SpikeMap:
    gamma: float

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ValueError(f"spike map needs gamma > 1, got {self.gamma}")

    @property
    def rho_c(self) -> float:
        return 1.0 / (self.gamma - 1.0)

    @property
    def edge_c(self) -> float:
        g = self.gamma
        return 4.0 * (g - 1.0) / g**2

    def limiting_value(self, lambda_sq: float) -> float:
        g = self.gamma
        return lambda_sq * ((g - 1.0) / g + 1.0 / (g * lambda_sq)) ** 2


def _check_unit_interval(r: np.ndarray) -> None:
    if np.any((r < 0.0) | (r > 1.0)) or np.any(np.isnan(r)):
        raise ValueError("r must lie in [0, 1]")


def bulk_pdf(law: BulkLaw, r):
    """Limiting density of a squared coefficient; zero off ``(0, c)``."""
    ra = np.asarray(r, dtype=float)
    _check_unit_interval(ra)
    g, c = law.gamma, law.edge_c
    inside = (ra > 0.0) & (ra < c)
    rr = np.where(inside, ra, 0.5 * c)
    radicand = 4.0 * (g - 1.0) * (1.0 - rr) / rr - (g - 2.0) ** 2
    dens = np.sqrt(np.maximum(radicand, 0.0)) / (2.0 * np.pi * (1.0 - rr))
    out = np.where(inside, dens, 0.0)
    return float(out) if out.ndim == 0 else out


def _cdf_integrand(law: BulkLaw):
    # density pushed through r = c sin^2(t); smooth on [0, pi/2] for every gamma >= 2
    g, c = law.gamma, law.edge_c

    def h(t):
        return g * c * np.cos(t) ** 2 / (np.pi * (1.0 - c * np.sin(t) ** 2))

    return h


def bulk_cdf(law: BulkLaw, r):
    """CDF of the bulk law by adaptive quadrature in the angle ``t``, ``r = c sin^2 t``.

    Accepts scalars or arrays; arrays are integrated jointly with ``quad_vec``.
    """
    ra = np.asarray(r, dtype=float)
    _check_unit_interval(ra)
    c = law.edge_c
    tau = np.arcsin(np.sqrt(np.minimum(ra, c) / c))
    h = _cdf_integrand(law)
    flat = tau.ravel()
    if flat.size == 1:
        val, _ = integrate.quad(h, 0.0, float(flat[0]), epsabs=QUAD_TOL, epsrel=QUAD_TOL)
        vals = np.array([val])
    else:
        vals, _ = integrate.quad_vec(
            lambda u: flat * h(flat * u), 0.0, 1.0, epsabs=QUAD_TOL, epsrel=QUAD_TOL
        )
    out = np.clip(np.where(ra.ravel() >= c, 1.0, vals), 0.0, 1.0).reshape(ra.shape)
    return float(out) if out.ndim == 0 else out


def bulk_moments(law: BulkLaw) -> dict[str, float]:
    g = law.gamma
    return {"mean": 1.0 / g, "variance": (g - 1.0) / g**3}


def _beta_shapes(n_dim: int, m_obs: int, n1: int | None = None) -> tuple[np.ndarray, float]:
    n = np.arange(1, n_dim + 1)
    a = (m_obs - n_dim - n + 1) / 2.0
    b = (n_dim + 1 if n1 is None else n1) / 2.0
    return a, b


def sample_wilks_null(
    n_dim: int,
    m_obs: int,
    count: int,
    rng: np.random.Generator,
    n1: int | None = None,
) -> np.ndarray:
    """Exact null draws of ``T' = -sum ln u_n``, ``u_n ~ Beta((M-N-n+1)/2, n1/2)``.

    ``n1`` defaults to ``N + 1`` (impropriety). ``n1 = N`` gives the
    independent real CCA statistic. Each beta is ``Ga / (Ga + Gb)`` from two
    unit-scale gamma draws; no matrix is ever formed.
    """
    if n_dim < 1 or m_obs < 2 * n_dim:
        raise ValueError(f"need M >= 2N >= 2, got N={n_dim}, M={m_obs}")
    a, b = _beta_shapes(n_dim, m_obs, n1)
    if a.min() <= 0 or b <= 0:
        raise ValueError(f"non-positive beta shape (a_min={a.min()}, b={b})")
    if count == 0:
        return np.empty(0)
    ga = rng.standard_gamma(np.broadcast_to(a, (count, n_dim)))
    gb = rng.standard_gamma(b, size=(count, n_dim))
    # -ln(ga/(ga+gb)) = ln1p(gb/ga), accurate when u is close to 1
    return np.log1p(gb / ga).sum(axis=1)


def glrt_clt_params(params: RegimeParams) -> GlrtNullParams:
    """Mean/std of the high-dimensional normal limit of ``T'`` and shifted-gamma constants."""
    n, m_obs, g = params.n_dim, params.m_obs, params.gamma
    if not g > 2.0:
        raise ValueError(f"CLT regime violated: gamma = M/N = {g} must exceed 2")
    mean = m_obs * (math.log(g / (g - 1.0)) + (g - 2.0) / g * math.log((g - 2.0) / (g - 1.0)))
    mean += 0.5 * math.log(g / (g - 2.0))
    var = 2.0 * (math.log((g - 1.0) ** 2 / (g * (g - 2.0))) + 1.0 / (m_obs * (g - 2.0)))
    s = math.sqrt(var)
    q = n * (n + 1) / 2.0
    p = math.sqrt(1.0 / q)
    return GlrtNullParams(mean, s, q, p, mean - p * q * s, n, m_obs)


def _bartlett_dof(params: GlrtNullParams) -> int:
    if params.m_obs <= params.n_dim:
        raise ValueError("Bartlett calibration needs M > N")
    return params.n_dim * (params.n_dim + 1)


def glrt_null_cdf(params: GlrtNullParams, t_prime, method: GlrtMethod = "adjusted_bartlett"):
    """Approximate null CDF of ``T'`` under one of the three calibrations."""
    t = np.asarray(t_prime, dtype=float)
    if method == "lognormal":
        out = special.ndtr((t - params.m) / params.s)
    elif method == "adjusted_bartlett":
        z = (t - params.alpha_shift) / (params.s * params.p)
        out = np.where(z > 0.0, special.gammainc(params.q, np.maximum(z, 0.0)), 0.0)
    elif method == "bartlett":
        dof = _bartlett_dof(params)
        out = special.chdtr(dof, (params.m_obs - params.n_dim) * np.maximum(t, 0.0))
    else:
        raise ValueError(f"unknown GLRT calibration {method!r}")
    return float(out) if np.ndim(out) == 0 else out


def glrt_null_sf(params: GlrtNullParams, t_prime, method: GlrtMethod = "adjusted_bartlett"):
    """Upper tail ``P(T' > t')``, computed without cancellation."""
    t = np.asarray(t_prime, dtype=float)
    if method == "lognormal":
        out = special.ndtr(-(t - params.m) / params.s)
    elif method == "adjusted_bartlett":
        z = (t - params.alpha_shift) / (params.s * params.p)
        out = np.where(z > 0.0, special.gammaincc(params.q, np.maximum(z, 0.0)), 1.0)
    elif method == "bartlett":
        dof = _bartlett_dof(params)
        out = special.chdtrc(dof, (params.m_obs - params.n_dim) * np.maximum(t, 0.0))
    else:
        raise ValueError(f"unknown GLRT calibration {method!r}")
    return float(out) if np.ndim(out) == 0 else out


def glrt_null_quantile(params: GlrtNullParams, prob: float, method: GlrtMethod = "adjusted_bartlett") -> float:
    """Inverse of :func:`glrt_null_cdf` at ``prob`` in (0, 1)."""
    if not 0.0 < prob < 1.0:
        raise ValueError(f"prob must be in (0, 1), got {prob}")
    if method == "lognormal":
        return params.m + params.s * float(special.ndtri(prob))
    if method == "adjusted_bartlett":
        return params.alpha_shift + params.s * params.p * float(special.gammaincinv(params.q, prob))
    if method == "bartlett":
        dof = _bartlett_dof(params)
        return float(special.chdtri(dof, 1.0 - prob)) / (params.m_obs - params.n_dim)
    raise ValueError(f"unknown GLRT calibration {method!r}")


def exact_glrt_moments(n_dim: int, m_obs: int, n1: int | None = None) -> dict[str, float]:
    """Finite-sample null mean and variance of ``T'`` from digamma/trigamma sums."""
    if m_obs < 2 * n_dim:
        raise ValueError(f"need M >= 2N, got N={n_dim}, M={m_obs}")
    a, b = _beta_shapes(n_dim, m_obs, n1)
    mean = np.sum(special.digamma(a + b) - special.digamma(a))
    var = np.sum(special.polygamma(1, a) - special.polygamma(1, a + b))
    return {"mean": float(mean), "variance": float(var)}


def roy_params(n_dim: int, m_obs: int) -> RoyNullParams:
    """Centering and scaling of the logit of the largest squared coefficient."""
    cos_psi = (m_obs - 2 * n_dim + 1) / m_obs
    cos_phi = (m_obs - 2 * n_dim - 1) / m_obs
    if not (-1.0 <= cos_phi and cos_psi <= 1.0):
        raise ValueError(f"arccos argument outside [-1, 1] for N={n_dim}, M={m_obs}")
    psi, phi = math.acos(cos_psi), math.acos(cos_phi)
    denom = math.sin(phi + psi) ** 2 * math.sin(psi) * math.sin(phi)
    if m_obs <= 2 * n_dim or denom <= 0.0:
        # phi + psi = pi at M = 2N: location and scale blow up
        raise ValueError(f"Roy edge law degenerate at N={n_dim}, M={m_obs} (needs M > 2N)")
    mu = 2.0 * math.log(math.tan(0.5 * (phi + psi)))
    sigma = (16.0 / m_obs**2 / denom) ** (1.0 / 3.0)
    near = m_obs <= 2 * n_dim + 1
    if near:
        warnings.warn(
            f"Roy edge law at M = 2N + 1 (N={n_dim}) is near-degenerate", RuntimeWarning, stacklevel=2
        )
    return RoyNullParams(psi, phi, mu, sigma, near)


def roy_null_cdf(params: RoyNullParams, w):
    """Tracy-Widom approximation of ``P(W <= w)``."""
    w = np.asarray(w, dtype=float)
    out = tw1_cdf((w - params.mu) / params.sigma)
    return float(out) if np.ndim(out) == 0 else out


def roy_null_quantile(params: RoyNullParams, prob: float) -> float:
    return params.mu + params.sigma * float(tw1_quantile(prob))


def spike_map(smap: SpikeMap, lambda_sq: float) -> dict:
    """Almost-sure limit of a sample squared coefficient for population spike ``lambda_sq``."""
    if not 0.0 <= lambda_sq <= 1.0:
        raise ValueError(f"lambda_sq must be in [0, 1], got {lambda_sq}")
    if lambda_sq <= smap.rho_c:
        return {"above_threshold": False, "limit": smap.edge_c}
    return {"above_threshold": True, "limit": smap.limiting_value(lambda_sq)}


def cca_offset_mean(params: GlrtNullParams) -> float:
    """Asymptotic null mean of ``T'`` when the beta shape uses ``n1 = N`` (real CCA)."""
    g = params.m_obs / params.n_dim
    if not g > 2.0:
        raise ValueError(f"CLT regime violated: gamma = {g}")
    return params.m + math.log((g - 1.0) / g)
