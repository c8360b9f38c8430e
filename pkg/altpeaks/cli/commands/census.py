"""
AltPeaks CLI Census Command
===========================

Exhaustive peak-set census of the alternating permutations of [n].
"""

from __future__ import annotations

import sys
from typing import Dict, Optional

from altpeaks.cli.codec import census_to_dict, dumps
from altpeaks.cli.render import census_table, make_console
from altpeaks.core.formulas import peak_count
from altpeaks.oracle.census import Census, peak_set_census


def _formula_column(census: Census) -> Dict[str, int]:
    return {str(peaks): peak_count(peaks, census.n).formula_count for peaks in census.entries}


def show_census(n: int, fmt: str = "text", compare: bool = False, jobs: Optional[int] = None) -> int:
    """
    Print the census; with `compare`, exit 1 if any formula disagrees.

    Returns:
        Exit code
    """
    if n < 1:
        raise ValueError(f"--n must be positive, got {n}")

    census = peak_set_census(n, jobs=jobs)
    formulas = _formula_column(census) if compare else None

    if fmt == "json":
        payload = census_to_dict(census)
        if formulas is not None:
            for entry, peaks in zip(payload["entries"], census.entries):
                entry["formula"] = formulas[str(peaks)]
        sys.stdout.write(dumps(payload).decode() + "\n")
    else:
        make_console().print(census_table(census, formulas))

    if formulas is not None and any(formulas[str(p)] != c for p, c in census.entries.items()):
        return 1
    return 0
