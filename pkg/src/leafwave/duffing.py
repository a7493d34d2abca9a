"""Exact periodic solutions of the free Duffing equation.

Each of the seven solution families solves

    x'' + alpha * x + beta * x**3 = 0

with coefficients fixed by the amplitude ``A`` and angular frequency ``omega``.
The displacement is built from the lemniscatic leaf functions evaluated at
``theta = omega * t + phi`` and from their antiderivatives

    F(theta) = integral_0^theta sleaf_2,    G(theta) = integral_0^theta cleaf_2.

Velocities and accelerations are closed forms; the accelerations use
triple-angle expressions, which make the residual vanish identically.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import leafcore
from .exceptions import InvalidParamsError

__all__ = [
    "SolutionType",
    "WaveParams",
    "DuffingCoefficients",
    "WaveMetadata",
    "StateSample",
    "coefficients",
    "evaluate",
    "first_derivative",
    "second_derivative",
    "kinematics",
    "residual",
    "energy",
    "initial_conditions",
    "metadata",
    "sample_wave",
]

SQRT2 = math.sqrt(2.0)


class SolutionType(enum.IntEnum):
    """The seven exact solution families, ordered I < II < ... < VII."""

    I = 1
    II = 2
    III = 3
    IV = 4
    V = 5
    VI = 6
    VII = 7

    @classmethod
    def parse(cls, value) -> "SolutionType":
        """Accept a member, its roman name (any case) or its ordinal 1..7."""
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            key = value.strip().upper()
            if key in cls.__members__:
                return cls[key]
            if key.isdigit():
                value = int(key)
        try:
            return cls(int(value))
        except (TypeError, ValueError):
            raise InvalidParamsError(f"unknown solution type {value!r}") from None


@dataclass(frozen=True)
class WaveParams:
    """Amplitude ``A``, angular frequency ``omega`` and phase ``phi``.

    ``A`` and ``omega`` must be finite and nonzero; negative values are allowed.
    """

    amplitude: float = 1.0
    angular_frequency: float = 1.0
    phase: float = 0.0

    def __post_init__(self):
        for name in ("amplitude", "angular_frequency", "phase"):
            try:
                val = float(getattr(self, name))
            except (TypeError, ValueError):
                raise InvalidParamsError(f"{name} must be a real number") from None
            if not math.isfinite(val):
                raise InvalidParamsError(f"{name} must be finite, got {val}")
            object.__setattr__(self, name, val)
        if self.amplitude == 0.0:
            raise InvalidParamsError("amplitude must be nonzero")
        if self.angular_frequency == 0.0:
            raise InvalidParamsError("angular frequency must be nonzero")


@dataclass(frozen=True)
class DuffingCoefficients:
    """Linear stiffness ``alpha`` and cubic stiffness ``beta``."""

    alpha: float
    beta: float


@dataclass(frozen=True)
class WaveMetadata:
    x_min: float
    x_max: float
    center: float
    amplitude: float
    period: float


@dataclass(frozen=True)
class StateSample:
    t: float
    x: float
    v: float
    a: float
    residual: float


def coefficients(kind, p: WaveParams) -> DuffingCoefficients:
    """Return ``(alpha, beta)`` for which the family solves the Duffing equation."""
    kind = SolutionType.parse(kind)
    w2 = p.angular_frequency ** 2
    r2 = w2 / p.amplitude ** 2
    table = {
        SolutionType.I: (-3.0 * w2, 4.0 * r2),
        SolutionType.II: (3.0 * w2, -4.0 * r2),
        SolutionType.III: (-3.0 * w2, 2.0 * r2),
        SolutionType.IV: (3.0 * w2, -2.0 * r2),
        SolutionType.V: (-3.0 * w2 * (1.0 + 2.0 * SQRT2), 2.0 * r2),
        SolutionType.VI: (3.0 * w2 * (2.0 * SQRT2 - 1.0), 2.0 * r2),
        SolutionType.VII: (6.0 * w2, -2.0 * r2),
    }
    alpha, beta = table[kind]
    return DuffingCoefficients(alpha, beta)


def _time_array(t) -> tuple[np.ndarray, bool]:
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InvalidParamsError("t must be finite")
    return arr, arr.ndim == 0


def _wrap(arr: np.ndarray, scalar: bool):
    return float(arr) if scalar else arr


def _state(kind: SolutionType, p: WaveParams, t: np.ndarray):
    """Displacement, velocity and acceleration at the times ``t``."""
    A = p.amplitude
    w = p.angular_frequency
    st = leafcore.leaf2_state(w * t + p.phase)
    s, c, F, G = st.s, st.c, st.int_s, st.int_c

    if kind in (SolutionType.I, SolutionType.II, SolutionType.V, SolutionType.VI):
        cG, sG, c3G = np.cos(G), np.sin(G), np.cos(3.0 * G)
    if kind in (SolutionType.III, SolutionType.IV, SolutionType.V, SolutionType.VI):
        cF, sF = np.cos(F), np.sin(F)
        c3F, s3F = np.cos(3.0 * F), np.sin(3.0 * F)

    if kind is SolutionType.I:
        x = A * cG
        v = -A * w * c * sG
        a = -A * w * w * c3G
    elif kind is SolutionType.II:
        x = A * sG
        v = A * w * c * cG
        a = -A * w * w * np.sin(3.0 * G)
    elif kind is SolutionType.III:
        x = A * (cF + sF)
        v = A * w * s * (cF - sF)
        a = A * w * w * (c3F - s3F)
    elif kind is SolutionType.IV:
        x = A * (cF - sF)
        v = -A * w * s * (cF + sF)
        a = -A * w * w * (c3F + s3F)
    elif kind is SolutionType.V:
        x = A * (cF + sF) + SQRT2 * A * cG
        v = A * w * s * (cF - sF) - SQRT2 * A * w * c * sG
        a = A * w * w * (c3F - s3F) - SQRT2 * A * w * w * c3G
    elif kind is SolutionType.VI:
        x = A * (cF + sF) - SQRT2 * A * cG
        v = A * w * s * (cF - sF) + SQRT2 * A * w * c * sG
        a = A * w * w * (c3F - s3F) + SQRT2 * A * w * w * c3G
    else:
        sc = s * c
        x = A * sc
        v = A * w * (c * c - s * s)
        a = A * w * w * (-6.0 * sc + 2.0 * sc ** 3)
    return x, v, a


def kinematics(kind, p: WaveParams, t):
    """Return ``(x, v, a)`` at ``t`` in a single pass over the leaf functions."""
    kind = SolutionType.parse(kind)
    arr, scalar = _time_array(t)
    return tuple(_wrap(q, scalar) for q in _state(kind, p, arr))


def evaluate(kind, p: WaveParams, t):
    """Displacement ``x(t)``."""
    kind = SolutionType.parse(kind)
    arr, scalar = _time_array(t)
    return _wrap(_state(kind, p, arr)[0], scalar)


def first_derivative(kind, p: WaveParams, t):
    """Velocity ``dx/dt``."""
    kind = SolutionType.parse(kind)
    arr, scalar = _time_array(t)
    return _wrap(_state(kind, p, arr)[1], scalar)


def second_derivative(kind, p: WaveParams, t):
    """Acceleration ``d^2x/dt^2``."""
    kind = SolutionType.parse(kind)
    arr, scalar = _time_array(t)
    return _wrap(_state(kind, p, arr)[2], scalar)


def residual(kind, p: WaveParams, t):
    """``x'' + alpha x + beta x^3``; zero up to rounding for an exact solution."""
    kind = SolutionType.parse(kind)
    arr, scalar = _time_array(t)
    x, _, a = _state(kind, p, arr)
    co = coefficients(kind, p)
    return _wrap(a + co.alpha * x + co.beta * x ** 3, scalar)


def energy(kind, p: WaveParams, t):
    """First integral ``v^2/2 + alpha x^2/2 + beta x^4/4``."""
    kind = SolutionType.parse(kind)
    arr, scalar = _time_array(t)
    x, v, _ = _state(kind, p, arr)
    co = coefficients(kind, p)
    return _wrap(0.5 * v * v + 0.5 * co.alpha * x * x + 0.25 * co.beta * x ** 4, scalar)


def initial_conditions(kind, p: WaveParams) -> tuple[float, float]:
    """``(x(0), v(0))``, i.e. the closed forms evaluated at ``theta = phi``."""
    x, v, _ = kinematics(kind, p, 0.0)
    return x, v


# Range [lo, hi] for A = 1 and period in units of pi_2 / |omega|.
_UNIT_RANGE = {
    SolutionType.I: (1.0 / SQRT2, 1.0),
    SolutionType.II: (-1.0 / SQRT2, 1.0 / SQRT2),
    SolutionType.III: (1.0, SQRT2),
    SolutionType.IV: (-1.0, 1.0),
    SolutionType.V: (2.0 ** 1.25, 1.0 + SQRT2),
    SolutionType.VI: (1.0 - SQRT2, SQRT2 - 1.0),
    SolutionType.VII: (1.0 - SQRT2, SQRT2 - 1.0),
}
_PERIOD_FACTOR = {
    SolutionType.I: 1.0,
    SolutionType.II: 2.0,
    SolutionType.III: 1.0,
    SolutionType.IV: 2.0,
    SolutionType.V: 0.5,
    SolutionType.VI: 1.0,
    SolutionType.VII: 1.0,
}


def metadata(kind, p: WaveParams) -> WaveMetadata:
    """Closed-form range, center, half peak-to-peak amplitude and period.

    A negative amplitude mirrors the range; the period depends on ``|omega|``.
    The Type V period is ``pi_2 / (2 |omega|)``, half the Type VI period, since
    its two components complete their swings every quarter of ``pi_2``.
    """
    kind = SolutionType.parse(kind)
    lo, hi = _UNIT_RANGE[kind]
    A = p.amplitude
    x_min, x_max = sorted((A * lo, A * hi))
    period = _PERIOD_FACTOR[kind] * leafcore.period_constant(2) / abs(p.angular_frequency)
    return WaveMetadata(
        x_min=x_min,
        x_max=x_max,
        center=0.5 * (x_min + x_max),
        amplitude=0.5 * (x_max - x_min),
        period=period,
    )


def sample_wave(kind, p: WaveParams, t_start: float, t_end: float, steps: int) -> list[StateSample]:
    """Sample ``steps`` equally spaced times from ``t_start`` to ``t_end`` inclusive."""
    kind = SolutionType.parse(kind)
    if isinstance(steps, bool) or int(steps) != steps or steps < 2:
        raise InvalidParamsError(f"steps must be an integer >= 2, got {steps!r}")
    t_start, t_end = float(t_start), float(t_end)
    if not (math.isfinite(t_start) and math.isfinite(t_end)) or not t_start < t_end:
        raise InvalidParamsError("time grid needs finite t_start < t_end")
    t = np.linspace(t_start, t_end, int(steps))
    x, v, a = _state(kind, p, t)
    co = coefficients(kind, p)
    res = a + co.alpha * x + co.beta * x ** 3
    return [
        StateSample(float(ti), float(xi), float(vi), float(ai), float(ri))
        for ti, xi, vi, ai, ri in zip(t, x, v, a, res)
    ]
