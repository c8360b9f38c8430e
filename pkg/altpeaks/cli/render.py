"""
AltPeaks Rendering
==================

Text output for the CLI:

- ASCII arc diagrams: above arcs stacked over the vertex line, below
  arcs hung under it, like a hand-drawn arc diagram
- DOT export: vertices in label order on one rank, below arcs dashed
- rich tables for counts, censuses and verification reports
"""

from __future__ import annotations

import sys
from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Tuple

from rich.console import Console
from rich.table import Table

from altpeaks.core.formulas import CountReport
from altpeaks.core.matchings import Matching, MatchingPair
from altpeaks.oracle.census import Census
from altpeaks.oracle.harness import VerificationReport

Arc = Tuple[int, int]

SPACING = 4


def make_console(stream: Optional[TextIO] = None) -> Console:
    """Console bound to the current stdout (so redirection is honoured)."""
    return Console(file=stream or sys.stdout, highlight=False, soft_wrap=True)


def _arc_levels(arcs: Sequence[Arc], column: Dict[int, int]) -> List[Tuple[Arc, int]]:
    """
    Assign each arc a height so arcs sharing columns never share a row.

    Shorter arcs are placed first; an arc sits one level above every
    already placed arc whose span overlaps its own.
    """
    placed: List[Tuple[Arc, int]] = []
    for arc in sorted(arcs, key=lambda a: (column[a[1]] - column[a[0]], a[0])):
        left, right = column[arc[0]], column[arc[1]]
        level = 1
        for other, other_level in placed:
            if column[other[0]] <= right and left <= column[other[1]]:
                level = max(level, other_level + 1)
        placed.append((arc, level))
    return placed


def _draw_half(arcs: Sequence[Arc], column: Dict[int, int], width: int) -> List[str]:
    levels = _arc_levels(arcs, column)
    height = max((level for _, level in levels), default=0)
    grid = [[" "] * width for _ in range(height)]

    # row 0 is nearest the vertex line
    for (a, b), level in levels:
        left, right = column[a], column[b]
        row = grid[level - 1]
        for x in range(left + 1, right):
            if row[x] == " ":
                row[x] = "-"
        row[left] = "+"
        row[right] = "+"
        for lower in range(level - 1):
            grid[lower][left] = "|"
            grid[lower][right] = "|"

    return ["".join(row).rstrip() for row in grid]


def _layout(labels: Sequence[int]) -> Tuple[Dict[int, int], int, str]:
    column = {label: index * SPACING for index, label in enumerate(labels)}
    width = (len(labels) - 1) * SPACING + 1 if labels else 0
    vertex_line = [" "] * (width + 3)
    for label, x in column.items():
        text = str(label)
        vertex_line[x:x + len(text)] = list(text)
    return column, width, "".join(vertex_line).rstrip()


def ascii_arc_diagram(pair: MatchingPair) -> str:
    """
    Render an arc diagram.

    Example (the pair of (1,2)):
        +---+
        1   2
        +---+
    """
    column, width, vertex_line = _layout(pair.labels)
    above = _draw_half(pair.above.arcs, column, width)
    below = _draw_half(pair.below.arcs, column, width)
    return "\n".join(list(reversed(above)) + [vertex_line] + below)


def ascii_matching(matching: Matching) -> str:
    """A single matching drawn above its vertex line."""
    column, width, vertex_line = _layout(matching.labels)
    above = _draw_half(matching.arcs, column, width)
    return "\n".join(list(reversed(above)) + [vertex_line])


def dot_arc_diagram(pair: MatchingPair, name: str = "arcs") -> str:
    """Graphviz description of an arc diagram."""
    lines = [f"graph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    lines.append("  { rank=same; " + " ".join(f'"{v}";' for v in pair.labels) + " }")
    for a, b in zip(pair.labels, pair.labels[1:]):
        lines.append(f'  "{a}" -- "{b}" [style=invis];')
    for opener, closer in pair.above.arcs:
        lines.append(f'  "{opener}" -- "{closer}" [side=above];')
    for opener, closer in pair.below.arcs:
        lines.append(f'  "{opener}" -- "{closer}" [side=below, style=dashed, color=blue];')
    lines.append("}")
    return "\n".join(lines)


def euler_table(values: Sequence[int]) -> Table:
    table = Table(title="Euler numbers")
    table.add_column("n", justify="right")
    table.add_column("E_n", justify="right")
    for n, value in enumerate(values):
        table.add_row(str(n), str(value))
    return table


def count_table(report: CountReport, n: int) -> Table:
    table = Table(title=f"peak set {report.peak_set}, n={n}")
    table.add_column("j", justify="right")
    table.add_column("i_j", justify="right")
    table.add_column("factors", justify="left")
    width = 2
    for j in range(len(report.factors) // width):
        pair = report.factors[j * width:(j + 1) * width]
        marker = "" if all(f >= 1 for f in pair) else "  <- infeasible"
        table.add_row(str(j + 1), str(report.peak_set.values[j]), " x ".join(str(f) for f in pair) + marker)
    table.caption = f"count = {report.formula_count}"
    return table


def census_table(census: Census, formulas: Optional[Dict[str, int]] = None) -> Table:
    table = Table(title=f"peak-set census, n={census.n}")
    table.add_column("peak set")
    table.add_column("count", justify="right")
    if formulas is not None:
        table.add_column("formula", justify="right")
    for peaks, count in census.entries.items():
        row = [str(peaks), str(count)]
        if formulas is not None:
            row.append(str(formulas.get(str(peaks), 0)))
        table.add_row(*row)
    table.caption = f"total = {census.total}"
    return table


def report_table(reports: Iterable[VerificationReport]) -> Table:
    table = Table(title="verification")
    table.add_column("check")
    table.add_column("size", justify="right")
    table.add_column("checked", justify="right")
    table.add_column("result")
    table.add_column("summary")
    for report in reports:
        summary = ", ".join(f"{k}={v}" for k, v in report.summary.items())
        result = "pass" if report.ok else f"FAIL ({len(report.mismatches)})"
        table.add_row(report.check, str(report.size), str(report.checked), result, summary)
    return table


def mismatch_lines(report: VerificationReport, limit: int = 20) -> List[str]:
    lines: List[str] = []
    for mismatch in report.mismatches[:limit]:
        lines.append(
            f"{report.check}[{report.size}] {mismatch.note}: {mismatch.subject} "
            f"expected {mismatch.expected!r}, got {mismatch.actual!r}"
        )
    if len(report.mismatches) > limit:
        lines.append(f"... {len(report.mismatches) - limit} more")
    return lines
