"""Aerodynamic coefficient component models.

Two interchangeable representations share one duck-typed surface:
``AnalyticAero`` is the smooth synthetic default, ``TableAero`` holds
bilinear tables over (alpha, Mach) as loaded from an airframe file.
Angles are radians throughout; tables on disk use degrees.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError, OutOfEnvelopeError

ALPHA_LIMIT = math.pi / 2

ALPHA_MACH_COMPONENTS = ("cn0", "cnd", "cm0", "cmd")
MACH_COMPONENTS = ("ca0", "caa", "cad", "dcat", "cmq")


class _EnvelopeMixin:
    mach_min: float
    mach_max: float

    def check_envelope(self, alpha: float, mach: float) -> None:
        if not -ALPHA_LIMIT <= alpha <= ALPHA_LIMIT:
            raise OutOfEnvelopeError(
                f"alpha {math.degrees(alpha):.3f} deg outside +/-90 deg"
            )
        if not self.mach_min <= mach <= self.mach_max:
            raise OutOfEnvelopeError(
                f"Mach {mach:.4f} outside [{self.mach_min:g}, {self.mach_max:g}]"
            )


@dataclass(frozen=True)
class AnalyticAero(_EnvelopeMixin):
    """Synthetic short-range air-to-air airframe aerodynamics.

    Normal force grows with sin(alpha) (linear plus cross-flow terms), the
    zero-fin pitching moment is statically stable near zero incidence and
    loses stiffness at high alpha, and fin effectiveness degrades mildly
    with incidence and Mach. Numbers are representative, not measured.
    """

    S: float = math.pi * 0.127**2 / 4
    l: float = 0.127
    cn_linear: float = 18.0
    cn_crossflow: float = 12.0
    cn_delta: float = 15.0
    cm_linear: float = -20.0
    cm_cubic: float = -8.0
    cm_delta: float = -150.0
    cm_q: float = -400.0
    ca_base: float = 0.30
    ca_transonic: float = 0.15
    ca_alpha: float = 0.1
    ca_delta: float = 0.5
    fin_alpha_fade: float = 0.3
    mach_min: float = 0.2
    mach_max: float = 4.0

    @staticmethod
    def _mach_factor(mach: float, slope: float) -> float:
        return 1.0 - slope * (mach - 1.0)

    def ca0(self, mach):
        return self.ca_base + self.ca_transonic * math.exp(-(((mach - 1.1) / 0.3) ** 2))

    def caa(self, mach):
        return self.ca_alpha

    def cad(self, mach):
        return self.ca_delta

    def dcat(self, mach):
        return 0.0

    def cmq(self, mach):
        return self.cm_q

    def cn0(self, alpha, mach):
        sa = math.sin(alpha)
        shape = self.cn_linear * sa * math.cos(alpha) + self.cn_crossflow * sa**3
        return shape * self._mach_factor(mach, 0.08)

    def cnd(self, alpha, mach):
        fade = 1.0 - self.fin_alpha_fade * math.sin(alpha) ** 2
        return self.cn_delta * fade * self._mach_factor(mach, 0.1)

    def cm0(self, alpha, mach):
        sa = math.sin(alpha)
        shape = self.cm_linear * sa * math.cos(alpha) + self.cm_cubic * sa**3
        return shape * self._mach_factor(mach, 0.05)

    def cmd(self, alpha, mach):
        fade = 1.0 - self.fin_alpha_fade * math.sin(alpha) ** 2
        return self.cm_delta * fade * self._mach_factor(mach, 0.1)


def _bracket(grid: list[float], x: float) -> tuple[int, float]:
    i = bisect_right(grid, x) - 1
    i = min(max(i, 0), len(grid) - 2)
    return i, (x - grid[i]) / (grid[i + 1] - grid[i])


@dataclass
class TableAero(_EnvelopeMixin):
    """Coefficient tables interpolated linearly in Mach, bilinearly in (alpha, Mach).

    ``alpha`` is in radians. 2-D tables are indexed ``[alpha, mach]``.
    """

    S: float
    l: float
    alpha: np.ndarray
    mach: np.ndarray
    tables: dict[str, np.ndarray]
    _alpha: list = field(init=False, repr=False)
    _mach: list = field(init=False, repr=False)
    _rows: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.alpha = np.asarray(self.alpha, dtype=float)
        self.mach = np.asarray(self.mach, dtype=float)
        if self.alpha.ndim != 1 or self.alpha.size < 2 or np.any(np.diff(self.alpha) <= 0):
            raise ConfigError("alpha grid must be strictly increasing with >= 2 points")
        if self.mach.ndim != 1 or self.mach.size < 2 or np.any(np.diff(self.mach) <= 0):
            raise ConfigError("Mach grid must be strictly increasing with >= 2 points")
        if self.alpha[0] > -ALPHA_LIMIT + 1e-9 or self.alpha[-1] < ALPHA_LIMIT - 1e-9:
            raise ConfigError("alpha grid must cover [-90, 90] deg")
        shapes = {name: (self.alpha.size, self.mach.size) for name in ALPHA_MACH_COMPONENTS}
        shapes.update({name: (self.mach.size,) for name in MACH_COMPONENTS})
        rows = {}
        for name, shape in shapes.items():
            if name not in self.tables:
                if name == "dcat":
                    self.tables[name] = np.zeros(shape)
                else:
                    raise ConfigError(f"missing coefficient table {name!r}")
            values = np.asarray(self.tables[name], dtype=float)
            if values.shape != shape:
                raise ConfigError(f"table {name!r} has shape {values.shape}, expected {shape}")
            if not np.all(np.isfinite(values)):
                raise ConfigError(f"table {name!r} contains non-finite values")
            self.tables[name] = values
            rows[name] = values.tolist()
        self._alpha = self.alpha.tolist()
        self._mach = self.mach.tolist()
        self._rows = rows

    @property
    def mach_min(self) -> float:
        return self._mach[0]

    @property
    def mach_max(self) -> float:
        return self._mach[-1]

    def _lookup1(self, name, mach):
        j, s = _bracket(self._mach, mach)
        row = self._rows[name]
        return row[j] + s * (row[j + 1] - row[j])

    def _lookup2(self, name, alpha, mach):
        i, r = _bracket(self._alpha, alpha)
        j, s = _bracket(self._mach, mach)
        tab = self._rows[name]
        lo, hi = tab[i], tab[i + 1]
        a = lo[j] + s * (lo[j + 1] - lo[j])
        b = hi[j] + s * (hi[j + 1] - hi[j])
        return a + r * (b - a)

    def ca0(self, mach):
        return self._lookup1("ca0", mach)

    def caa(self, mach):
        return self._lookup1("caa", mach)

    def cad(self, mach):
        return self._lookup1("cad", mach)

    def dcat(self, mach):
        return self._lookup1("dcat", mach)

    def cmq(self, mach):
        return self._lookup1("cmq", mach)

    def cn0(self, alpha, mach):
        return self._lookup2("cn0", alpha, mach)

    def cnd(self, alpha, mach):
        return self._lookup2("cnd", alpha, mach)

    def cm0(self, alpha, mach):
        return self._lookup2("cm0", alpha, mach)

    def cmd(self, alpha, mach):
        return self._lookup2("cmd", alpha, mach)


def tabulate(model, alpha_deg=None, mach=None) -> TableAero:
    """Sample any aero model onto a grid, producing an equivalent ``TableAero``."""
    alpha_deg = np.arange(-90.0, 90.0 + 1e-9, 2.0) if alpha_deg is None else np.asarray(alpha_deg, float)
    mach = np.linspace(model.mach_min, model.mach_max, 20) if mach is None else np.asarray(mach, float)
    alpha = np.radians(alpha_deg)
    tables = {}
    for name in ALPHA_MACH_COMPONENTS:
        fn = getattr(model, name)
        tables[name] = np.array([[fn(a, m) for m in mach] for a in alpha])
    for name in MACH_COMPONENTS:
        fn = getattr(model, name)
        tables[name] = np.array([fn(m) for m in mach])
    return TableAero(S=model.S, l=model.l, alpha=alpha, mach=mach, tables=tables)


def peak_magnitudes(model, n_alpha: int = 181, n_mach: int = 12) -> tuple[float, float]:
    """Peak |C_N0| and |C_M0| over alpha in [-90, 90] deg and the model's Mach range."""
    alphas = np.linspace(-ALPHA_LIMIT, ALPHA_LIMIT, n_alpha)
    machs = np.linspace(model.mach_min, model.mach_max, n_mach)
    cn = max(abs(model.cn0(a, m)) for a in alphas for m in machs)
    cm = max(abs(model.cm0(a, m)) for a in alphas for m in machs)
    return cn, cm
