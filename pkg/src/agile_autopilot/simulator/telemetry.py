"""Telemetry channel contract and CSV/metrics writers."""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

# Fixed order; angles in rad, rates in rad/s, SI elsewhere.
CHANNELS = (
    "t", "u", "w", "q", "alpha", "V", "M", "Q",
    "alpha_cmd_raw", "alpha_cmd",
    "z1", "z2",
    "delta1_true", "delta2_true", "delta1_hat", "delta2_hat",
    "x2d", "delta_cmd", "delta", "a_z", "lambda",
    # extras beyond the core record
    "delta_rate", "theta", "heading", "x", "z", "a_cmd",
)


class Telemetry:
    """Column store filled one record (tuple in ``CHANNELS`` order) per step."""

    def __init__(self, rows=None):
        self.rows = list(rows or [])
        self._arrays = None

    def append(self, row) -> None:
        self.rows.append(tuple(row))
        self._arrays = None

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, name: str) -> np.ndarray:
        if self._arrays is None:
            data = np.array(self.rows, dtype=float).reshape(-1, len(CHANNELS))
            self._arrays = {c: data[:, i] for i, c in enumerate(CHANNELS)}
        return self._arrays[name]

    def to_csv(self, path) -> None:
        lines = [",".join(CHANNELS)]
        for row in self.rows:
            lines.append(",".join(f"{v:.9g}" for v in row))
        Path(path).write_text("\n".join(lines) + "\n")


def read_telemetry_csv(path) -> Telemetry:
    text = Path(path).read_text().splitlines()
    header = tuple(text[0].split(","))
    if header != CHANNELS:
        raise ValueError(f"{path}: unexpected telemetry header")
    return Telemetry(tuple(float(v) for v in line.split(",")) for line in text[1:] if line)


def _clean(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, np.floating):
        return _clean(float(value))
    return value


def write_metrics(metrics: dict, path) -> None:
    Path(path).write_text(json.dumps({k: _clean(v) for k, v in metrics.items()}, indent=2,
                                     sort_keys=True) + "\n")
