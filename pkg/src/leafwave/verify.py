"""Self-checks of the exact Duffing solutions against independent oracles."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import duffing, oracle
from .duffing import SolutionType, WaveParams

__all__ = ["CheckResult", "DEFAULT_TOLERANCES", "run_checks"]

DEFAULT_TOLERANCES = {
    "residual": 1e-8,
    "energy": 1e-8,
    "initial": 1e-6,
    "range": 1e-8,
    "period": 1e-6,
    "trajectory": 1e-6,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    kind: SolutionType
    max_error: float
    tol: float
    note: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.max_error <= self.tol)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.kind.name:<3} {self.name:<10} max_err={self.max_error:.3e} tol={self.tol:.1e}"
        return f"{text} {self.note}".rstrip()


def _extrema_error(kind, p, meta) -> float:
    period = meta.period
    t0 = 0.1
    ts = np.linspace(t0, t0 + period, 2001)
    xs = duffing.evaluate(kind, p, ts)
    step = ts[1] - ts[0]
    f = lambda t: duffing.evaluate(kind, p, t)
    i_min = int(np.argmin(xs))
    i_max = int(np.argmax(xs))
    _, lo = oracle.locate_extremum(f, ts[i_min] - step, ts[i_min] + step, "min")
    _, hi = oracle.locate_extremum(f, ts[i_max] - step, ts[i_max] + step, "max")
    return max(abs(lo - meta.x_min), abs(hi - meta.x_max))


def run_checks(kind, p: WaveParams, grid=(-10.0, 10.0, 21), tolerances=None) -> list[CheckResult]:
    """Residual, energy, initial-state, range, period and RK4 checks for one family."""
    kind = SolutionType.parse(kind)
    tol = dict(DEFAULT_TOLERANCES)
    tol.update(tolerances or {})
    results = []
    co = duffing.coefficients(kind, p)
    meta = duffing.metadata(kind, p)

    t_start, t_end, steps = grid
    samples = duffing.sample_wave(kind, p, t_start, t_end, steps)
    dense = np.linspace(t_start, t_end, 1001)
    res = max(
        max(abs(s.residual) for s in samples),
        float(np.max(np.abs(duffing.residual(kind, p, dense)))),
    )
    results.append(CheckResult("residual", kind, res, tol["residual"]))

    ts = np.linspace(0.0, 3.0 * meta.period, 1000)
    e = duffing.energy(kind, p, ts)
    results.append(CheckResult("energy", kind, float(np.max(np.abs(e - e[0]))), tol["energy"]))

    x0, v0 = duffing.initial_conditions(kind, p)
    h = 1e-5
    f = lambda t: duffing.evaluate(kind, p, t)
    v_fd = (f(h) - f(-h)) / (2.0 * h)
    scale = max(1.0, abs(p.amplitude * p.angular_frequency))
    ic_err = max(abs(x0 - f(0.0)), abs(v0 - v_fd) / scale)
    results.append(CheckResult("initial", kind, ic_err, tol["initial"]))

    results.append(CheckResult("range", kind, _extrema_error(kind, p, meta), tol["range"]))

    measured = oracle.empirical_period(f, 0.3, 2.2 * meta.period, meta.period / 200.0)
    note = f"measured={measured:.9f} closed_form={meta.period:.9f}"
    if kind is SolutionType.V:
        alt = math.pi / (2.0 * abs(p.angular_frequency))
        note += f"; pi_2/(2|omega|) confirmed, pi/(2|omega|)={alt:.9f} does not match"
    rel = abs(measured - meta.period) / meta.period
    results.append(CheckResult("period", kind, rel, tol["period"], note))

    dt = 1e-3 / abs(p.angular_frequency)
    traj = oracle.integrate_duffing(co, x0, v0, meta.period, dt)
    exact = duffing.evaluate(kind, p, traj.times)
    traj_err = float(np.max(np.abs(traj.x - exact))) / max(1.0, abs(p.amplitude))
    results.append(CheckResult("trajectory", kind, traj_err, tol["trajectory"]))
    return results
