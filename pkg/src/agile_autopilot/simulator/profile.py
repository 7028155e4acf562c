"""Angle-of-attack reference profiles from two-column CSV (t_seconds, alpha_deg)."""

from __future__ import annotations

import csv
import math
from pathlib import Path

import numpy as np

from ..errors import ConfigError


class AlphaProfile:
    """Piecewise-linear alpha(t) in radians, held constant outside the samples."""

    def __init__(self, times, alpha_deg):
        self.times = np.asarray(times, dtype=float)
        self.alpha = np.radians(np.asarray(alpha_deg, dtype=float))
        if self.times.size == 0:
            raise ConfigError("profile has no samples")

    def __call__(self, t: float) -> float:
        if self.times.size == 1:
            return float(self.alpha[0])
        return float(np.interp(t, self.times, self.alpha))


def load_alpha_profile(path) -> AlphaProfile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read profile {path}: {exc}") from exc
    times, values = [], []
    for lineno, row in enumerate(csv.reader(text.splitlines()), start=1):
        if not row or all(not c.strip() for c in row) or row[0].lstrip().startswith("#"):
            continue
        if len(row) != 2:
            raise ConfigError(f"{path}:{lineno}: expected 2 columns, got {len(row)}")
        try:
            t, a = float(row[0]), float(row[1])
        except ValueError:
            if not times and lineno == 1:
                continue  # header
            raise ConfigError(f"{path}:{lineno}: non-numeric value") from None
        if not (math.isfinite(t) and math.isfinite(a)):
            raise ConfigError(f"{path}:{lineno}: non-finite value")
        if times and t <= times[-1]:
            raise ConfigError(f"{path}:{lineno}: time {t:g} not strictly increasing")
        times.append(t)
        values.append(a)
    if not times:
        raise ConfigError(f"{path}: no samples")
    return AlphaProfile(times, values)


def write_alpha_profile(path, times, alpha_deg) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t_seconds", "alpha_deg"])
        for t, a in zip(times, alpha_deg):
            writer.writerow([f"{t:.9g}", f"{a:.9g}"])
