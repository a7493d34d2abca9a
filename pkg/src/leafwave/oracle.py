"""Independent numerical checks for the leaf functions and Duffing solutions.

Nothing here calls into the closed-form evaluation paths: quadrature, RK4
integration, finite differences and period detection only ever see plain
callables and ODE coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exceptions import ConvergenceError, InvalidParamsError

__all__ = [
    "ToleranceSpec",
    "Trajectory",
    "quad_singular",
    "integrate_duffing",
    "integrate_leaf_ode",
    "fd_second_derivative",
    "empirical_period",
    "golden_section_minimize",
    "locate_extremum",
]


@dataclass(frozen=True)
class ToleranceSpec:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_evals: int = 20000

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise InvalidParamsError("tolerances must be positive")
        if int(self.max_evals) != self.max_evals or self.max_evals < 1:
            raise InvalidParamsError("max_evals must be a positive integer")


@dataclass(frozen=True)
class Trajectory:
    """Sampled states ``(x, v)`` at strictly increasing ``times``."""

    times: np.ndarray
    states: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        states = np.asarray(self.states, dtype=float)
        if states.ndim != 2 or states.shape[1] != 2 or len(states) != len(times):
            raise InvalidParamsError("states must be an (N, 2) array matching times")
        if len(times) > 1 and not np.all(np.diff(times) > 0):
            raise InvalidParamsError("times must be strictly increasing")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "states", states)

    @property
    def x(self) -> np.ndarray:
        return self.states[:, 0]

    @property
    def v(self) -> np.ndarray:
        return self.states[:, 1]


# ---------------------------------------------------------------- quadrature

_DE_TAU_MAX = 6.0


def _de_level(a: float, b: float, h: float):
    k = int(math.ceil(_DE_TAU_MAX / h))
    tau = np.arange(-k, k + 1) * h
    s = 0.5 * math.pi * np.sinh(tau)
    with np.errstate(over="ignore"):
        half_plus = 1.0 / (1.0 + np.exp(-2.0 * s))
        half_minus = 1.0 / (1.0 + np.exp(2.0 * s))
        weight = h * 0.5 * math.pi * np.cosh(tau) / np.cosh(s) ** 2
    length = b - a
    da = length * half_plus
    db = length * half_minus
    x = np.where(da <= db, a + da, b - db)
    return x, da, db, 0.5 * length * weight


def quad_singular(
    f: Callable,
    a: float,
    b: float,
    tol: ToleranceSpec | None = None,
    *,
    endpoint_distance: bool = False,
) -> float:
    """Integrate ``f`` over ``(a, b)`` with the tanh-sinh rule.

    The step is halved until two successive levels agree within
    ``max(abs_tol, rel_tol * |I|)``.  Endpoints are never evaluated, so
    integrable endpoint singularities are allowed.  With ``endpoint_distance``
    the integrand is called as ``f(x, x - a, b - x)``; passing the exact
    distances lets ``1/sqrt`` type singularities be resolved to full precision,
    which is impossible from ``x`` alone once ``b - x`` drops below the spacing
    of floats near ``b``.

    Raises ``ConvergenceError`` when ``max_evals`` is exhausted or the rule
    truncation at ``|tau| = 6`` is not negligible.
    """
    tol = tol or ToleranceSpec()
    a, b = float(a), float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise InvalidParamsError("integration limits must be finite")
    if a == b:
        return 0.0
    if a > b:
        return -quad_singular(f, b, a, tol, endpoint_distance=endpoint_distance)

    evals = 0
    previous = None
    h = 0.5
    while True:
        x, da, db, w = _de_level(a, b, h)
        keep = (w > 0) & (da > 0) & (db > 0)
        if not endpoint_distance:
            keep &= (x > a) & (x < b)
        x, da, db, w = x[keep], da[keep], db[keep], w[keep]
        if endpoint_distance:
            fx = np.array([f(xi, dai, dbi) for xi, dai, dbi in zip(x, da, db)], dtype=float)
        else:
            fx = np.array([f(xi) for xi in x], dtype=float)
        evals += len(x)
        if not np.all(np.isfinite(fx)):
            raise ConvergenceError("integrand is not finite at an interior node")
        terms = w * fx
        estimate = float(np.sum(terms))
        edge = max(abs(terms[0]), abs(terms[-1])) if len(terms) else 0.0
        if previous is not None:
            target = max(tol.abs_tol, tol.rel_tol * abs(estimate))
            if abs(estimate - previous) <= target:
                if edge > target:
                    raise ConvergenceError("integrand decays too slowly at the endpoints")
                return estimate
        if evals >= tol.max_evals:
            raise ConvergenceError(
                f"no convergence within {tol.max_evals} evaluations "
                f"(last change {abs(estimate - (previous or 0.0)):.3g})"
            )
        previous = estimate
        h *= 0.5


# ------------------------------------------------------------ ODE integration


def _rk4(rhs, x0: float, v0: float, t_end: float, dt: float) -> Trajectory:
    if not (dt > 0 and math.isfinite(dt)):
        raise InvalidParamsError("dt must be positive")
    if not (t_end > 0 and math.isfinite(t_end)):
        raise InvalidParamsError("t_end must be positive; negate time to integrate backward")
    n_steps = max(1, math.ceil(t_end / dt * (1.0 - 1e-12)))
    h = t_end / n_steps
    xs = np.empty(n_steps + 1)
    vs = np.empty(n_steps + 1)
    x, v = float(x0), float(v0)
    xs[0], vs[0] = x, v
    half = 0.5 * h
    sixth = h / 6.0
    for i in range(1, n_steps + 1):
        a1 = rhs(x)
        x2, v2 = x + half * v, v + half * a1
        a2 = rhs(x2)
        x3, v3 = x + half * v2, v + half * a2
        a3 = rhs(x3)
        x4, v4 = x + h * v3, v + h * a3
        a4 = rhs(x4)
        x, v = (
            x + sixth * (v + 2.0 * v2 + 2.0 * v3 + v4),
            v + sixth * (a1 + 2.0 * a2 + 2.0 * a3 + a4),
        )
        xs[i], vs[i] = x, v
    times = np.arange(n_steps + 1) * h
    times[-1] = t_end
    return Trajectory(times, np.column_stack((xs, vs)))


def integrate_duffing(c, x0: float, v0: float, t_end: float, dt: float) -> Trajectory:
    """Fixed-step RK4 for ``x'' = -alpha x - beta x^3`` on ``[0, t_end]``.

    ``c`` is anything with ``alpha`` and ``beta`` attributes.  The step is
    shrunk slightly so that the last sample lands exactly on ``t_end``.
    """
    alpha, beta = float(c.alpha), float(c.beta)
    return _rk4(lambda x: -alpha * x - beta * x * x * x, x0, v0, t_end, dt)


def integrate_leaf_ode(n: int, x0: float, v0: float, t_end: float, dt: float) -> Trajectory:
    """Fixed-step RK4 for ``x'' = -n x^(2n-1)``."""
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidParamsError("n must be a positive integer")
    n = int(n)
    power = 2 * n - 1
    return _rk4(lambda x: -n * x ** power, x0, v0, t_end, dt)


# ------------------------------------------------------- differences, periods


def fd_second_derivative(f: Callable, t: float, h: float) -> float:
    """Central second difference ``(f(t-h) - 2 f(t) + f(t+h)) / h^2``."""
    if not h > 0:
        raise InvalidParamsError("h must be positive")
    return (f(t - h) - 2.0 * f(t) + f(t + h)) / (h * h)


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_minimize(f: Callable, a: float, b: float, tol: float = 1e-12, max_iter: int = 200):
    """Minimise a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``."""
    if not a < b:
        raise InvalidParamsError("golden-section search needs a < b")
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= tol * max(1.0, abs(a) + abs(b)):
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = c if fc <= fd else d
    return x, min(fc, fd)


def locate_extremum(f: Callable, a: float, b: float, kind: str = "min", tol: float = 1e-12):
    """Golden-section search for a minimum or maximum of ``f`` inside ``[a, b]``."""
    if kind == "min":
        return golden_section_minimize(f, a, b, tol)
    if kind == "max":
        x, fx = golden_section_minimize(lambda t: -f(t), a, b, tol)
        return x, -fx
    raise InvalidParamsError("kind must be 'min' or 'max'")


def _vectorised(f: Callable) -> Callable:
    def g(t: np.ndarray) -> np.ndarray:
        try:
            out = np.asarray(f(t), dtype=float)
            if out.shape == t.shape:
                return out
        except (TypeError, ValueError):
            pass
        return np.array([f(ti) for ti in t], dtype=float)

    return g


def empirical_period(
    f: Callable,
    t_probe: float,
    horizon: float,
    resolution: float,
    *,
    samples: int = 128,
    threshold: float = 1e-7,
) -> float:
    """Smallest shift ``P > 0`` with ``max |f(t + P) - f(t)| < threshold``.

    ``t`` runs over ``samples`` points in ``[t_probe, t_probe + horizon/2]``.
    Shifts ``0, resolution, 2 resolution, ...`` up to ``horizon/2`` are scanned;
    each local minimum of the mismatch, in increasing order, is refined by
    golden-section search on the mean squared mismatch and accepted once it
    passes the threshold.  Works for waves that never cross zero.
    """
    if not (horizon > 0 and resolution > 0):
        raise InvalidParamsError("horizon and resolution must be positive")
    g = _vectorised(f)
    ts = t_probe + np.linspace(0.0, 0.5 * horizon, samples)
    base = g(ts)
    shifts = np.arange(0, int(0.5 * horizon / resolution) + 2) * resolution
    grid = (ts[None, :] + shifts[:, None]).ravel()
    diffs = g(grid).reshape(len(shifts), samples) - base
    mismatch = np.max(np.abs(diffs), axis=1)

    def mean_sq(p: float) -> float:
        return float(np.mean((g(ts + p) - base) ** 2))

    for k in range(1, len(shifts) - 1):
        if mismatch[k] <= mismatch[k - 1] and mismatch[k] <= mismatch[k + 1]:
            p, _ = golden_section_minimize(mean_sq, shifts[k - 1], shifts[k + 1], tol=1e-15)
            if np.max(np.abs(g(ts + p) - base)) < threshold:
                return float(p)
    raise ConvergenceError("no period found within the horizon")
