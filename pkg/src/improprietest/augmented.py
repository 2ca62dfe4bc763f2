"""Augmented covariances and impropriety coefficients.

A complex vector ``z = u + i v`` in C^N is handled through its real stacked
representation ``x = [u, v]`` in R^{2N}. Everything in this module works on
that representation: sample covariances, the proper/improper split of a
2N x 2N covariance, the whitened improper part ``Gamma``, its +/- paired
spectrum and the two test statistics built from it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "AugmentedSample",
    "AugmentedCovariance",
    "ProperImproperSplit",
    "ImproprietySpectrum",
    "GlrtStatistic",
    "RoyStatistic",
    "is_group_element",
    "sample_covariance",
    "split_proper_improper",
    "gamma_matrix",
    "impropriety_spectrum",
    "glrt_statistic",
    "roy_statistic",
    "population_spectrum",
    "sample_spectrum",
]

SYMMETRY_RTOL = 1e-10
CLAMP_TOL = 1e-8
PAIRING_TOL = 1e-6


@dataclass(frozen=True)
class AugmentedSample:
    """M observations of the stacked real vector ``[u, v]``, one per row."""

    data: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.data, dtype=float)
        if data.ndim != 2 or data.shape[1] == 0 or data.shape[1] % 2:
            raise ValueError(
                f"sample rows must have an even number 2N >= 2 of columns, got shape {data.shape}"
            )
        if not np.all(np.isfinite(data)):
            raise ValueError("sample contains non-finite entries")
        object.__setattr__(self, "data", data)

    @property
    def n_dim(self) -> int:
        return self.data.shape[1] // 2

    @property
    def m_obs(self) -> int:
        return self.data.shape[0]

    @classmethod
    def from_complex(cls, z) -> "AugmentedSample":
        """Build from an (M, N) complex array; row m becomes ``[Re z_m, Im z_m]``."""
        z = np.asarray(z)
        if z.ndim != 2:
            raise ValueError(f"expected an (M, N) complex array, got shape {z.shape}")
        return cls(np.hstack([z.real, z.imag]))

    def to_complex(self) -> np.ndarray:
        n = self.n_dim
        return self.data[:, :n] + 1j * self.data[:, n:]


@dataclass(frozen=True)
class AugmentedCovariance:
    """Symmetric 2N x 2N covariance of ``[u, v]``."""

    full: np.ndarray

    def __post_init__(self):
        full = np.asarray(self.full, dtype=float)
        if full.ndim != 2 or full.shape[0] != full.shape[1] or full.shape[0] % 2:
            raise ValueError(f"expected a square 2N x 2N matrix, got shape {full.shape}")
        scale = max(np.max(np.abs(full)), np.finfo(float).tiny)
        if np.max(np.abs(full - full.T)) > SYMMETRY_RTOL * scale:
            raise ValueError("covariance matrix is not symmetric")
        object.__setattr__(self, "full", full)

    @classmethod
    def from_blocks(cls, c_uu, c_uv, c_vv) -> "AugmentedCovariance":
        """Assemble from the three free blocks; ``C_vu`` is set to ``C_uv^T``."""
        c_uu, c_uv, c_vv = (np.asarray(b, dtype=float) for b in (c_uu, c_uv, c_vv))
        return cls(np.block([[c_uu, c_uv], [c_uv.T, c_vv]]))

    @property
    def n_dim(self) -> int:
        return self.full.shape[0] // 2

    @property
    def c_uu(self) -> np.ndarray:
        n = self.n_dim
        return self.full[:n, :n]

    @property
    def c_uv(self) -> np.ndarray:
        n = self.n_dim
        return self.full[:n, n:]

    @property
    def c_vu(self) -> np.ndarray:
        n = self.n_dim
        return self.full[n:, :n]

    @property
    def c_vv(self) -> np.ndarray:
        n = self.n_dim
        return self.full[n:, n:]


@dataclass(frozen=True)
class ProperImproperSplit:
    proper_part: np.ndarray
    improper_part: np.ndarray


@dataclass(frozen=True)
class ImproprietySpectrum:
    """Impropriety coefficients ``l_1 >= ... >= l_N`` in [0, 1] and their squares."""

    coeffs: np.ndarray
    squared: np.ndarray

    @classmethod
    def from_coeffs(cls, coeffs) -> "ImproprietySpectrum":
        coeffs = np.sort(np.asarray(coeffs, dtype=float).ravel())[::-1]
        if coeffs.size and (coeffs[0] > 1.0 or coeffs[-1] < 0.0):
            raise ValueError("impropriety coefficients must lie in [0, 1]")
        return cls(coeffs, coeffs**2)

    @classmethod
    def from_squared(cls, squared) -> "ImproprietySpectrum":
        squared = np.asarray(squared, dtype=float)
        return cls.from_coeffs(np.sqrt(squared))

    @property
    def n_dim(self) -> int:
        return self.coeffs.size


@dataclass(frozen=True)
class GlrtStatistic:
    T: float
    T_prime: float
    saturated: bool


@dataclass(frozen=True)
class RoyStatistic:
    r1: float
    W: float
    saturated: bool


def _check_even_square(a: np.ndarray) -> int:
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] % 2 or a.shape[0] == 0:
        raise ValueError(f"expected a square 2N x 2N matrix, got shape {a.shape}")
    return a.shape[0] // 2


def is_group_element(matrix) -> bool:
    """True iff ``matrix`` is non-singular with blocks ``[[G1, -G2], [G2, G1]]``.

    The block comparison is exact; this is the real image of GL_N(C).
    """
    g = np.asarray(matrix, dtype=float)
    n = _check_even_square(g)
    g1, g12, g21, g22 = g[:n, :n], g[:n, n:], g[n:, :n], g[n:, n:]
    if not (np.array_equal(g1, g22) and np.array_equal(g12, -g21)):
        return False
    # det of the real image equals |det(G1 + i G2)|^2
    sign, _ = np.linalg.slogdet(g1 + 1j * g21)
    return sign != 0


def sample_covariance(sample: AugmentedSample, center: bool = False) -> AugmentedCovariance:
    """Zero-mean ML covariance ``S = X^T X / M`` of the stacked sample.

    ``center=True`` subtracts the column means first. The impropriety model is
    zero-mean, so this is off by default and the null calibrations in this
    package assume it is off.
    """
    x = sample.data
    m, two_n = x.shape
    if m < two_n:
        raise ValueError(
            f"covariance singularly underdetermined: M={m} observations for 2N={two_n}"
        )
    if center:
        x = x - x.mean(axis=0)
    s = x.T @ x / m
    return AugmentedCovariance(0.5 * (s + s.T))


def split_proper_improper(cov: AugmentedCovariance) -> ProperImproperSplit:
    """Split ``C`` into its proper part (in the group structure) and the rest."""
    n = cov.n_dim
    c_uu, c_uv, c_vu, c_vv = cov.c_uu, cov.c_uv, cov.c_vu, cov.c_vv
    diag = 0.5 * (c_uu + c_vv)
    skew = 0.5 * (c_uv - c_vu)
    proper = np.empty_like(cov.full)
    proper[:n, :n] = diag
    proper[n:, n:] = diag
    proper[:n, n:] = skew
    proper[n:, :n] = -skew
    return ProperImproperSplit(proper, cov.full - proper)


def _inv_sqrt_psd(a: np.ndarray, n_dim: int) -> np.ndarray:
    w, v = np.linalg.eigh(a)
    if w[0] <= n_dim * np.finfo(float).eps * w[-1]:
        raise ValueError(
            f"proper part not positive definite (eigenvalues in [{w[0]:.3g}, {w[-1]:.3g}])"
        )
    return (v / np.sqrt(w)) @ v.T


def gamma_matrix(cov: AugmentedCovariance) -> np.ndarray:
    """Whitened improper part ``P^{-1/2} Q P^{-1/2}`` with ``C = P + Q`` the split."""
    split = split_proper_improper(cov)
    w = _inv_sqrt_psd(split.proper_part, cov.n_dim)
    g = w @ split.improper_part @ w
    return 0.5 * (g + g.T)


def impropriety_spectrum(gamma) -> ImproprietySpectrum:
    """Non-negative half of the +/- paired spectrum of ``Gamma``, sorted descending."""
    g = np.asarray(gamma, dtype=float)
    n = _check_even_square(g)
    eig = np.linalg.eigvalsh(0.5 * (g + g.T))
    scale = max(1.0, abs(eig[-1]), abs(eig[0]))
    if np.max(np.abs(eig + eig[::-1])) > PAIRING_TOL * scale:
        raise ValueError("spectrum not +/- paired; input is not a valid Gamma matrix")
    top = eig[::-1][:n].copy()
    if top[0] > 1.0 + CLAMP_TOL or top[-1] < -CLAMP_TOL:
        raise ValueError(
            f"eigenvalue outside [0,1]: range [{top[-1]:.3g}, {top[0]:.3g}]"
        )
    np.clip(top, 0.0, 1.0, out=top)
    return ImproprietySpectrum(top, top**2)


def population_spectrum(cov: AugmentedCovariance) -> ImproprietySpectrum:
    """Population impropriety coefficients of an exactly known covariance."""
    return impropriety_spectrum(gamma_matrix(cov))


def sample_spectrum(sample: AugmentedSample, center: bool = False) -> ImproprietySpectrum:
    """Sample impropriety coefficients: covariance, Gamma, spectrum."""
    return impropriety_spectrum(gamma_matrix(sample_covariance(sample, center=center)))


def glrt_statistic(spec: ImproprietySpectrum) -> GlrtStatistic:
    """``T = prod(1 - r_n)`` and ``T' = -ln T``, accumulated in the log domain."""
    r = spec.squared
    if np.any(r >= 1.0):
        return GlrtStatistic(0.0, np.inf, True)
    t_prime = -float(np.sum(np.log1p(-r)))
    return GlrtStatistic(float(np.exp(-t_prime)), t_prime, False)


def roy_statistic(spec: ImproprietySpectrum) -> RoyStatistic:
    """Largest squared coefficient ``r_1`` and its logit ``W``."""
    r1 = float(spec.squared[0])
    if r1 <= 0.0:
        return RoyStatistic(r1, -np.inf, True)
    if r1 >= 1.0:
        return RoyStatistic(r1, np.inf, True)
    return RoyStatistic(r1, float(np.log(r1) - np.log1p(-r1)), False)
