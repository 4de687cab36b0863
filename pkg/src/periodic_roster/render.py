"""Static Gantt charts of a plan: one row per worker, ASCII or SVG."""
from __future__ import annotations

from html import escape
from typing import Optional

from .assignment import PeriodicAssignment
from .model import Instance

_GLYPHS = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_PALETTE = ("#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
            "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac")


def _bars(instance: Instance, plan: Optional[PeriodicAssignment], periods: int):
    """``(row, task, start, end)`` clipped to the window ``[0, weeks * L)``."""
    L = instance.units_per_week
    weeks = (plan.period if plan else 1) * periods
    horizon = weeks * L
    out = []
    for r in range(1, weeks + 2):
        for i in instance.task_ids:
            t = instance.task(i)
            s, e = t.start + (r - 1) * L, t.end + (r - 1) * L
            s, e = max(s, 0), min(e, horizon)
            if s >= e:
                continue
            row = plan.worker(i, r) if plan else i
            out.append((row, i, s, e))
    return weeks, horizon, out


def render_ascii(instance: Instance, plan: Optional[PeriodicAssignment] = None,
                 periods: int = 1, width: int = 96) -> str:
    """Text chart; without a plan each task gets its own row."""
    weeks, horizon, bars = _bars(instance, plan, periods)
    scale = max(1, -(-horizon // width))
    cols = -(-horizon // scale)
    rows = instance.workers if plan else instance.n
    grid = [["." for _ in range(cols)] for _ in range(rows)]
    for row, i, s, e in bars:
        for c in range(s // scale, -(-e // scale)):
            grid[row - 1][c] = _GLYPHS[(i - 1) % len(_GLYPHS)]
    L = instance.units_per_week
    for line in grid:
        for w in range(1, weeks):
            c = w * L // scale
            if c < cols and line[c] == ".":
                line[c] = "|"
    label = "w" if plan else "t"
    pad = len(f"{label}{rows}")
    head = f"{'':{pad}} weeks={weeks} L={L} scale={scale}"
    body = [f"{label + str(k + 1):>{pad}} " + "".join(line) for k, line in enumerate(grid)]
    return "\n".join([head, *body]) + "\n"


def render_svg(instance: Instance, plan: Optional[PeriodicAssignment] = None,
               periods: int = 1, px_per_unit: Optional[float] = None) -> str:
    weeks, horizon, bars = _bars(instance, plan, periods)
    L = instance.units_per_week
    rows = instance.workers if plan else instance.n
    unit = px_per_unit or max(1.0, 800.0 / max(horizon, 1))
    left, row_h, top = 40, 24, 20
    w = left + horizon * unit + 10
    h = top + rows * row_h + 10
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" height="{h:.0f}" '
        f'font-family="monospace" font-size="11">'
    ]
    label = "w" if plan else "t"
    for k in range(rows):
        y = top + k * row_h
        parts.append(f'<text x="4" y="{y + 16}">{label}{k + 1}</text>')
    for wk in range(weeks + 1):
        x = left + wk * L * unit
        parts.append(f'<line x1="{x:.1f}" y1="{top - 4}" x2="{x:.1f}" y2="{h - 6:.0f}" stroke="#999"/>')
        if wk < weeks:
            parts.append(f'<text x="{x + 2:.1f}" y="{top - 6}">week {wk + 1}</text>')
    for row, i, s, e in bars:
        x = left + s * unit
        y = top + (row - 1) * row_h + 2
        fill = _PALETTE[(i - 1) % len(_PALETTE)]
        parts.append(
            f'<rect x="{x:.1f}" y="{y}" width="{(e - s) * unit:.1f}" height="{row_h - 4}" '
            f'fill="{fill}" stroke="#333"><title>{escape(f"t{i} [{s},{e})")}</title></rect>'
        )
        parts.append(f'<text x="{x + 2:.1f}" y="{y + 14}" fill="#fff">t{i}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
