"""Reference tables recomputed from the library and rendered as fixed-point CSV."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import duffing, leafcore
from .duffing import SolutionType, WaveParams
from .exceptions import InvalidParamsError

__all__ = ["TableArtifact", "TABLE_IDS", "build_table", "render_table", "format_fixed"]

TABLE_IDS = (1, 2, 3, 4, 5)

_TIMES = np.arange(-10, 11, dtype=float)


@dataclass(frozen=True)
class TableArtifact:
    """Header plus numeric rows; the first column is the row key (n or t)."""

    table_id: int
    header: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    decimals: int


def format_fixed(value: float, decimals: int) -> str:
    """Fixed-point text with negative zero folded to zero."""
    text = f"{value:.{decimals}f}"
    if text.startswith("-") and float(text) == 0.0:
        text = text[1:]
    return text


def _duffing_table(table_id: int, kind: SolutionType) -> TableArtifact:
    p = WaveParams()
    x, _, a = duffing.kinematics(kind, p, _TIMES)
    res = duffing.residual(kind, p, _TIMES)
    co = duffing.coefficients(kind, p)
    # the residual column reads a + alpha x + beta x^3
    label = f"a{co.alpha:+g}x{co.beta:+g}x^3"
    if kind is SolutionType.III:
        F = leafcore.integral_sleaf2(_TIMES)
        header = ("t", "cosF", "sinF", "x", "x^3", "a", label)
        cols = (_TIMES, np.cos(F), np.sin(F), x, x ** 3, a, res)
    else:
        header = ("t", "x", "x^3", "a", label)
        cols = (_TIMES, x, x ** 3, a, res)
    rows = tuple(tuple(float(c[i]) for c in cols) for i in range(len(_TIMES)))
    return TableArtifact(table_id, header, rows, 5)


def build_table(table_id: int) -> TableArtifact:
    """Recompute table 1 (pi_n), 2 (n = 2 leaf functions) or 3-5 (Types I-III)."""
    if table_id == 1:
        rows = tuple((float(n), leafcore.period_constant(n)) for n in (1, 2, 3))
        return TableArtifact(1, ("n", "pi_n"), rows, 3)
    if table_id == 2:
        cols = (
            _TIMES,
            leafcore.sleaf(2, _TIMES),
            leafcore.cleaf(2, _TIMES),
            leafcore.integral_sleaf2(_TIMES),
            leafcore.integral_cleaf2(_TIMES),
        )
        rows = tuple(tuple(float(c[i]) for c in cols) for i in range(len(_TIMES)))
        return TableArtifact(2, ("t", "sleaf2", "cleaf2", "int_sleaf2", "int_cleaf2"), rows, 5)
    kinds = {3: SolutionType.I, 4: SolutionType.II, 5: SolutionType.III}
    if table_id in kinds:
        return _duffing_table(table_id, kinds[table_id])
    raise InvalidParamsError(f"unknown table {table_id!r}; choose from {TABLE_IDS}")


def render_table(table: TableArtifact) -> str:
    """CSV text: integer ``n`` or one-decimal ``t`` key, then fixed decimals."""
    lines = [",".join(table.header)]
    for row in table.rows:
        key = f"{int(row[0])}" if table.table_id == 1 else format_fixed(row[0], 1)
        lines.append(",".join([key] + [format_fixed(v, table.decimals) for v in row[1:]]))
    return "\n".join(lines) + "\n"
