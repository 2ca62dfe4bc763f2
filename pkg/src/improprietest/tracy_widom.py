"""Tracy-Widom law for beta = 1 (largest eigenvalue of real ensembles).

The CDF ships as a plain-text table ``data/tw1_table.txt`` (columns ``x``,
``F1(x)``) on a uniform grid over [-10, 10] with spacing 0.01. Values between
grid points use monotone cubic (PCHIP) interpolation; the quantile is the exact
inverse of that interpolant.

The table was produced by :func:`fredholm_cdf`, which evaluates

    F1(s) = det(I - K_s) on L^2(0, inf),   K_s(x, y) = Ai((x + y)/2 + s) / 2,

with a Gauss-Legendre Nystrom discretisation (Bornemann, Math. Comp. 2010).
Run ``python -m improprietest.tracy_widom`` to regenerate it.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache
from importlib import resources

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq
from scipy.special import airy

__all__ = ["fredholm_cdf", "tw1_cdf", "tw1_pdf", "tw1_quantile", "TABLE_SHA256", "load_table"]

TABLE_NAME = "tw1_table.txt"
TABLE_VERSION = 1
TABLE_SHA256 = "4ff4d88813f40adbac6ee3d841d0496fd976a3c14c302ee7d2ca46e79f3c5001"
GRID = (-10.0, 10.0, 0.01)


def fredholm_cdf(s: float, nodes: int | None = None) -> float:
    """F1(s) by Nystrom discretisation of the Fredholm determinant.

    The kernel is negligible once ``x + s`` exceeds about 12, so the half-line
    is truncated to ``(0, max(12, 12 - s))``. Node count grows with the
    oscillatory stretch of Ai on the left.
    """
    length = max(12.0, 12.0 - s)
    if nodes is None:
        nodes = int(60 + 6 * max(0.0, -s))
    x, w = np.polynomial.legendre.leggauss(nodes)
    x = 0.5 * length * (x + 1.0)
    sw = np.sqrt(0.5 * length * w)
    kernel = 0.5 * airy(0.5 * (x[:, None] + x[None, :]) + s)[0]
    det = np.linalg.det(np.eye(nodes) - sw[:, None] * kernel * sw[None, :])
    return float(min(max(det, 0.0), 1.0))


def _table_text() -> str:
    lo, hi, step = GRID
    xs = np.round(np.arange(lo, hi + step / 2, step), 10)
    lines = [
        f"# Tracy-Widom beta=1 CDF, table version {TABLE_VERSION}",
        "# columns: x F1(x); Fredholm determinant, Gauss-Legendre Nystrom",
    ]
    for x in xs:
        lines.append(f"{x:.2f} {fredholm_cdf(float(x)):.16e}")
    return "\n".join(lines) + "\n"


def load_table() -> tuple[np.ndarray, np.ndarray]:
    """Read the shipped table after verifying its pinned SHA-256."""
    raw = resources.files("improprietest").joinpath("data").joinpath(TABLE_NAME).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != TABLE_SHA256:
        raise RuntimeError(
            f"{TABLE_NAME} checksum mismatch: expected {TABLE_SHA256}, got {digest}"
        )
    arr = np.loadtxt(raw.decode().splitlines(), comments="#")
    return arr[:, 0], arr[:, 1]


@lru_cache(maxsize=1)
def _table() -> tuple[np.ndarray, np.ndarray, PchipInterpolator]:
    x, f = load_table()
    if np.any(np.diff(f) < 0):
        raise RuntimeError(f"{TABLE_NAME} is not monotone")
    return x, f, PchipInterpolator(x, f, extrapolate=False)


def tw1_cdf(x):
    """CDF of TW1; 0 left of the table and 1 right of it (both below 1e-10 away)."""
    xs, _, interp = _table()
    lo, hi = xs[0], xs[-1]
    xa = np.asarray(x, dtype=float)
    out = np.where(xa <= lo, 0.0, 1.0)
    inside = (xa > lo) & (xa < hi)
    if np.any(inside):
        out = np.where(inside, np.clip(interp(np.clip(xa, lo, hi)), 0.0, 1.0), out)
    return float(out) if out.ndim == 0 else out


def tw1_pdf(x):
    """Density of TW1 as the derivative of the CDF interpolant."""
    xs, _, interp = _table()
    xa = np.asarray(x, dtype=float)
    inside = (xa > xs[0]) & (xa < xs[-1])
    out = np.where(inside, np.maximum(interp.derivative()(np.clip(xa, xs[0], xs[-1])), 0.0), 0.0)
    return float(out) if out.ndim == 0 else out


def _quantile_scalar(prob: float) -> float:
    if not 0.0 < prob < 1.0:
        raise ValueError(f"TW1 quantile needs prob in (0, 1), got {prob}")
    xs, fs, interp = _table()
    if prob <= fs[0] or prob >= fs[-1]:
        raise ValueError(
            f"prob={prob} lies outside the tabulated CDF range [{fs[0]:.3g}, {fs[-1]:.12g}]"
        )
    # first grid point with F >= prob; the root lies in the cell to its left
    k = int(np.searchsorted(fs, prob, side="left"))
    a, b = xs[k - 1], xs[k]
    if fs[k] == prob:
        return float(b)
    return brentq(lambda t: float(interp(t)) - prob, a, b, xtol=1e-13, rtol=1e-14)


def tw1_quantile(prob):
    """Inverse of :func:`tw1_cdf` on (0, 1)."""
    pa = np.asarray(prob, dtype=float)
    if pa.ndim == 0:
        return _quantile_scalar(float(pa))
    return np.array([_quantile_scalar(float(p)) for p in pa.ravel()]).reshape(pa.shape)


if __name__ == "__main__":  # pragma: no cover
    import sys

    text = _table_text()
    path = resources.files("improprietest").joinpath("data").joinpath(TABLE_NAME)
    with open(str(path), "w") as fh:
        fh.write(text)
    sys.stdout.write(hashlib.sha256(text.encode()).hexdigest() + "\n")
