"""Scenario metrics.

Definitions (all times relative to the step time for step commands):

* rise time: first 10 % to first 90 % crossing of the step size.
* settling time: last sample at which |alpha_cmd_raw - alpha| exceeds 2 %
  of the step size; ``None`` if the final sample is still outside the band.
* overshoot: peak excursion beyond the commanded final value, in percent of
  the step size; 0 for a monotone response.
* steady-state error: mean of ``alpha_cmd_raw - alpha`` over the final 10 %
  of samples (signed, degrees).
* tracking error: max |alpha - alpha_cmd| (shaped reference) after the
  first sample, and the same against the raw command.
* estimate error: RMS of (hat - true) for both lumped unknowns, skipping the
  warm-up window.

Metrics that need a step are ``None`` when the step size is zero.
"""

from __future__ import annotations

import math

import numpy as np

SETTLING_BAND = 0.02
FINAL_WINDOW = 0.10


def step_response_metrics(t, y, final_value, initial_value, t_step=0.0) -> dict:
    t = np.asarray(t, float)
    y = np.asarray(y, float)
    size = final_value - initial_value
    na = {"rise_time": None, "settling_time": None, "overshoot_pct": None}
    if size == 0 or not np.isfinite(size):
        return na
    mask = t >= t_step
    tt, yy = t[mask], y[mask]
    if tt.size == 0:
        return na
    progress = (yy - initial_value) / size
    out = dict(na)
    i10 = np.flatnonzero(progress >= 0.1)
    i90 = np.flatnonzero(progress >= 0.9)
    if i10.size and i90.size:
        out["rise_time"] = float(tt[i90[0]] - tt[i10[0]])
    outside = np.flatnonzero(np.abs(final_value - yy) > SETTLING_BAND * abs(size))
    if outside.size == 0:
        out["settling_time"] = 0.0
    elif outside[-1] < tt.size - 1:
        out["settling_time"] = float(tt[outside[-1]] - t_step)
    beyond = (yy - final_value) * math.copysign(1.0, size)
    out["overshoot_pct"] = float(max(0.0, beyond.max()) / abs(size) * 100.0)
    return out


def steady_state_error(error, fraction: float = FINAL_WINDOW) -> float:
    error = np.asarray(error, float)
    n = max(1, int(round(error.size * fraction)))
    return float(error[-n:].mean())


def compute_metrics(telemetry, config) -> dict:
    t = telemetry["t"]
    if t.size == 0:
        raise ValueError("telemetry is empty")
    alpha = telemetry["alpha"]
    raw = telemetry["alpha_cmd_raw"]
    shaped = telemetry["alpha_cmd"]
    deg = math.degrees

    metrics = {"samples": int(t.size), "t_end": float(t[-1])}
    cmd = config.command
    if cmd.type == "step":
        t_step = cmd.t_step
        final = math.radians(cmd.alpha_deg)
        before = alpha[t <= t_step] if np.any(t <= t_step) else alpha[:1]
        metrics.update(step_response_metrics(t, alpha, final, float(before[0]), t_step))
        metrics["step_size_deg"] = deg(final - float(before[0]))
    else:
        metrics.update({"rise_time": None, "settling_time": None, "overshoot_pct": None})
    metrics["steady_state_error_deg"] = deg(steady_state_error(raw - alpha))
    if t.size > 1:
        metrics["peak_tracking_error_deg"] = deg(float(np.max(np.abs(alpha - shaped)[1:])))
        metrics["peak_raw_command_error_deg"] = deg(float(np.max(np.abs(alpha - raw)[1:])))
    else:
        metrics["peak_tracking_error_deg"] = metrics["peak_raw_command_error_deg"] = 0.0
    metrics["peak_delta_deg"] = deg(float(np.max(np.abs(telemetry["delta"]))))
    metrics["peak_delta_rate_deg_s"] = deg(float(np.max(np.abs(telemetry["delta_rate"]))))
    dcmd = telemetry["delta_cmd"]
    demanded = np.abs(np.diff(dcmd)) / np.diff(t) if t.size > 1 else np.zeros(1)
    metrics["peak_delta_rate_demanded_deg_s"] = deg(float(demanded.max()))
    metrics["peak_delta_cmd_deg"] = deg(float(np.max(np.abs(dcmd))))

    warm = config.controller.warmup_delays * config.controller.tau_d
    sel = t >= t[0] + warm
    for i in (1, 2):
        if np.any(sel):
            e = telemetry[f"delta{i}_hat"][sel] - telemetry[f"delta{i}_true"][sel]
            metrics[f"rms_estimate_error_{i}"] = float(np.sqrt(np.mean(e * e)))
        else:
            metrics[f"rms_estimate_error_{i}"] = None

    change = np.abs(telemetry["heading"] - telemetry["heading"][0])
    hit = np.flatnonzero(change >= math.pi)
    metrics["heading_reversal_time"] = float(t[hit[0]]) if hit.size else None
    metrics["max_heading_change_deg"] = deg(float(change.max()))
    return metrics
