"""Command line interface: ``leafwave {tables,eval,wave,coeffs,verify,period}``.

Exit status is 0 on success, 1 when a verification check fails and 2 for
usage, parameter or domain errors.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from dataclasses import asdict

from . import duffing, leafcore, oracle, tables, verify
from .duffing import SolutionType, WaveParams
from .exceptions import LeafwaveError

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

TOL_ENV = "LEAFWAVE_TOL"

_EVAL_FUNCS = {
    "sleaf": leafcore.sleaf,
    "cleaf": leafcore.cleaf,
    "arcsleaf": leafcore.arcsleaf,
    "arccleaf": leafcore.arccleaf,
}


class _UsageError(Exception):
    pass


def _type_arg(text: str) -> SolutionType:
    try:
        return SolutionType.parse(text)
    except LeafwaveError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    wave_opts = argparse.ArgumentParser(add_help=False)
    wave_opts.add_argument("--type", dest="kind", type=_type_arg, choices=list(SolutionType),
                           metavar="{I,...,VII}", help="solution family")
    wave_opts.add_argument("--A", dest="amplitude", type=float, default=1.0, help="amplitude (default 1)")
    wave_opts.add_argument("--omega", dest="omega", type=float, default=1.0, help="angular frequency (default 1)")
    wave_opts.add_argument("--phi", dest="phi", type=float, default=0.0, help="phase (default 0)")

    grid_opts = argparse.ArgumentParser(add_help=False)
    grid_opts.add_argument("--from", dest="t_start", type=float, default=-10.0, help="first time (default -10)")
    grid_opts.add_argument("--to", dest="t_end", type=float, default=10.0, help="last time (default 10)")
    grid_opts.add_argument("--steps", type=int, default=21, help="number of samples (default 21)")

    out_opts = argparse.ArgumentParser(add_help=False)
    out_opts.add_argument("--out", help="write to this file instead of stdout")
    out_opts.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = argparse.ArgumentParser(prog="leafwave", description="Leaf functions and exact Duffing waves.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", parents=[out_opts], help="recompute a reference table")
    p.add_argument("table_id", type=int, choices=tables.TABLE_IDS)

    p = sub.add_parser("eval", help="evaluate a leaf function")
    p.add_argument("name", choices=sorted([*_EVAL_FUNCS, "sleaf_int", "cleaf_int", "pi_n"]))
    p.add_argument("n", type=int, help="leaf index (the integrals need n = 2)")
    p.add_argument("arg", type=float, nargs="?", help="time or value; omitted for pi_n")

    sub.add_parser("wave", parents=[wave_opts, grid_opts, out_opts], help="sample a Duffing wave")
    sub.add_parser("coeffs", parents=[wave_opts], help="print Duffing coefficients")
    sub.add_parser("verify", parents=[wave_opts, grid_opts], help="run self-checks")
    sub.add_parser("period", parents=[wave_opts], help="measure the period numerically")
    return parser


def _params(args) -> WaveParams:
    return WaveParams(args.amplitude, args.omega, args.phi)


def _kinds(args) -> list[SolutionType]:
    return [args.kind] if args.kind is not None else list(SolutionType)


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _cmd_tables(args) -> int:
    table = tables.build_table(args.table_id)
    if args.format == "json":
        text = json.dumps({"table": table.table_id, "header": list(table.header),
                           "rows": [list(r) for r in table.rows]}, indent=2) + "\n"
    else:
        text = tables.render_table(table)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_eval(args) -> int:
    name = args.name
    if name == "pi_n":
        value = leafcore.period_constant(args.n)
    else:
        if args.arg is None:
            raise _UsageError(f"{name} needs an argument")
        if name in ("sleaf_int", "cleaf_int"):
            if args.n != 2:
                raise _UsageError(f"{name} is only available for n = 2")
            func = leafcore.integral_sleaf2 if name == "sleaf_int" else leafcore.integral_cleaf2
            value = func(args.arg)
        else:
            value = _EVAL_FUNCS[name](args.n, args.arg)
    print(f"{value:.12g}")
    return EXIT_OK


def wave_text(kind: SolutionType, p: WaveParams, t_start: float, t_end: float, steps: int, fmt: str) -> str:
    samples = duffing.sample_wave(kind, p, t_start, t_end, steps)
    if fmt == "json":
        co = duffing.coefficients(kind, p)
        meta = {
            "type": kind.name,
            "params": {"A": p.amplitude, "omega": p.angular_frequency, "phi": p.phase},
            "coefficients": asdict(co),
            "metadata": asdict(duffing.metadata(kind, p)),
        }
        return json.dumps({"meta": meta, "samples": [asdict(s) for s in samples]}, indent=2) + "\n"
    buf = io.StringIO()
    buf.write("t,x,v,a,residual\n")
    for s in samples:
        # adding 0.0 folds negative zero
        buf.write(",".join(f"{v + 0.0:.9g}" for v in (s.t, s.x, s.v, s.a, s.residual)) + "\n")
    return buf.getvalue()


def _cmd_wave(args) -> int:
    if args.kind is None:
        raise _UsageError("wave needs --type")
    text = wave_text(args.kind, _params(args), args.t_start, args.t_end, args.steps, args.format)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_coeffs(args) -> int:
    p = _params(args)
    print("type,alpha,beta")
    for kind in _kinds(args):
        co = duffing.coefficients(kind, p)
        print(f"{kind.name},{co.alpha:.12g},{co.beta:.12g}")
    return EXIT_OK


def _tolerance_override() -> dict:
    raw = os.environ.get(TOL_ENV)
    if raw is None or raw.strip() == "":
        return {}
    try:
        value = float(raw)
    except ValueError:
        raise _UsageError(f"{TOL_ENV} must be a decimal number, got {raw!r}") from None
    if not value > 0:
        raise _UsageError(f"{TOL_ENV} must be positive")
    return {"residual": value}


def _cmd_verify(args) -> int:
    p = _params(args)
    overrides = _tolerance_override()
    grid = (args.t_start, args.t_end, args.steps)
    failed = []
    for kind in _kinds(args):
        for result in verify.run_checks(kind, p, grid, overrides):
            print(result.line())
            if not result.passed:
                failed.append(f"{kind.name}:{result.name}")
    if failed:
        print("FAILED: " + ", ".join(failed))
        return EXIT_FAIL
    print("ALL PASS")
    return EXIT_OK


def _cmd_period(args) -> int:
    p = _params(args)
    print("type,measured,closed_form,rel_diff")
    for kind in _kinds(args):
        expected = duffing.metadata(kind, p).period
        measured = oracle.empirical_period(
            lambda t, k=kind: duffing.evaluate(k, p, t), 0.3, 2.2 * expected, expected / 200.0
        )
        rel = abs(measured - expected) / expected
        print(f"{kind.name},{measured:.12g},{expected:.12g},{rel:.3e}")
    return EXIT_OK


_COMMANDS = {
    "tables": _cmd_tables,
    "eval": _cmd_eval,
    "wave": _cmd_wave,
    "coeffs": _cmd_coeffs,
    "verify": _cmd_verify,
    "period": _cmd_period,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (LeafwaveError, _UsageError) as exc:
        print(f"leafwave: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"leafwave: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
