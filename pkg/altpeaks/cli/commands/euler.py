"""
AltPeaks CLI Euler Command
==========================

Print the table E_0, ..., E_max_n.
"""

from __future__ import annotations

import sys

from altpeaks.cli.codec import dumps
from altpeaks.cli.render import euler_table, make_console
from altpeaks.core.formulas import euler_numbers


def show_euler(max_n: int, fmt: str = "text") -> int:
    """
    Print Euler numbers up to `max_n`.

    Returns:
        Exit code
    """
    if max_n < 0:
        raise ValueError(f"--max-n must be non-negative, got {max_n}")

    values = euler_numbers(max_n)

    if fmt == "json":
        sys.stdout.write(dumps({"euler": values}).decode() + "\n")
    else:
        make_console().print(euler_table(values))
    return 0
