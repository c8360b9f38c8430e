"""
AltPeaks CLI Count Command
==========================

Closed-form number of alternating permutations of [n] with a given
peak set, with the per-peak factor trace.
"""

from __future__ import annotations

import sys

from altpeaks.cli.codec import count_report_to_dict, dumps
from altpeaks.cli.render import count_table, make_console
from altpeaks.core.formulas import peak_count
from altpeaks.core.permcore import PeakSet


def show_count(peaks_text: str, n: int, fmt: str = "text") -> int:
    """
    Print the count for one peak set.

    Raises:
        PeakSetError: If the set does not have the peak-set shape for n

    Returns:
        Exit code
    """
    peaks = PeakSet.parse(peaks_text)
    report = peak_count(peaks, n)

    if fmt == "json":
        payload = {"n": n, **count_report_to_dict(report)}
        sys.stdout.write(dumps(payload).decode() + "\n")
        return 0

    console = make_console()
    if report.factors:
        console.print(count_table(report, n))
    print(report.formula_count)
    return 0
