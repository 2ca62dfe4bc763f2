"""CSV input/output for observation matrices.

One observation per line, either 2N real columns ``u_1..u_N, v_1..v_N`` or
N complex columns written ``a+bi`` (``j`` is accepted as well). A header line
is optional and detected by its first field not parsing as a number.
"""

from __future__ import annotations

import csv
import re
from pathlib import Path

import numpy as np

from .augmented import AugmentedSample

__all__ = ["load_csv", "write_csv", "parse_complex"]

_COMPLEX_UNIT = re.compile(r"[ij]", re.IGNORECASE)


def parse_complex(cell: str) -> complex:
    text = cell.strip().replace(" ", "")
    return complex(_COMPLEX_UNIT.sub("j", text))


def _is_number(cell: str) -> bool:
    try:
        parse_complex(cell)
    except ValueError:
        return False
    return True


def load_csv(path) -> AugmentedSample:
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    if rows and not _is_number(rows[0][0]):
        rows = rows[1:]
    if not rows:
        raise ValueError(f"{path}: no observations")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ValueError(f"{path}: rows have differing column counts {sorted(widths)}")
    is_complex = any(_COMPLEX_UNIT.search(c) for r in rows for c in r)
    try:
        if is_complex:
            z = np.array([[parse_complex(c) for c in r] for r in rows])
            return AugmentedSample.from_complex(z)
        x = np.array([[float(c) for c in r] for r in rows])
    except ValueError as exc:
        raise ValueError(f"{path}: unparseable cell ({exc})") from None
    return AugmentedSample(x)


def write_csv(sample: AugmentedSample, path, complex_columns: bool = False, header: bool = True) -> Path:
    path = Path(path)
    n = sample.n_dim
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        if complex_columns:
            if header:
                w.writerow([f"z{k + 1}" for k in range(n)])
            for row in sample.to_complex():
                w.writerow([f"{float(c.real)!r}{float(c.imag):+.17g}i" for c in row])
        else:
            if header:
                w.writerow([f"u{k + 1}" for k in range(n)] + [f"v{k + 1}" for k in range(n)])
            for row in sample.data:
                w.writerow([repr(float(v)) for v in row])
    return path
