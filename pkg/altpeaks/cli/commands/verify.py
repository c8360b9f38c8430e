"""
AltPeaks CLI Verify Command
===========================

Run the selected verification checks over a range of sizes.

Checks indexed by n: theorem, bijections, odd_pairs (odd n only),
generators. Checks indexed by k: lemma, cycles.
"""

from __future__ import annotations

import sys
from typing import Callable, Dict, List, Optional

from altpeaks.cli.codec import dumps, report_to_dict
from altpeaks.cli.render import make_console, mismatch_lines, report_table
from altpeaks.oracle.harness import (
    VerificationReport,
    verify_bijections,
    verify_cycle_updown,
    verify_generators,
    verify_lemma,
    verify_odd_pairs,
    verify_theorem,
)
from altpeaks.utils.logger import get_logger

logger = get_logger("altpeaks.cli.verify")

BY_N = ("theorem", "bijections", "odd_pairs", "generators")
BY_K = ("lemma", "cycles")


def _runners(jobs: Optional[int]) -> Dict[str, Callable[[int], VerificationReport]]:
    return {
        "theorem": lambda n: verify_theorem(n, jobs=jobs),
        "bijections": lambda n: verify_bijections(n, jobs=jobs),
        "odd_pairs": verify_odd_pairs,
        "generators": verify_generators,
        "lemma": verify_lemma,
        "cycles": verify_cycle_updown,
    }


def _sizes(check: str, n_values: Optional[List[int]], k_values: Optional[List[int]]) -> List[int]:
    if check in BY_K:
        if k_values is None:
            raise ValueError(f"--{check} needs --k")
        return k_values
    if n_values is None:
        raise ValueError(f"--{check.replace('_', '-')} needs --n")
    if check == "odd_pairs":
        return [n for n in n_values if n % 2 == 1]
    return [n for n in n_values if n >= 1]


def run_checks(
    checks: List[str],
    n_values: Optional[List[int]],
    k_values: Optional[List[int]],
    fmt: str = "text",
    jobs: Optional[int] = None,
) -> int:
    """
    Run every selected check at every selected size.

    Returns:
        0 if every check passed, 1 on any mismatch
    """
    if not checks:
        raise ValueError("select at least one check (--theorem, --lemma, --bijections, ...)")

    runners = _runners(jobs)
    plan = [(check, size) for check in checks for size in _sizes(check, n_values, k_values)]
    if not plan:
        raise ValueError("no sizes selected for the requested checks")

    reports: List[VerificationReport] = []
    for check, size in plan:
        logger.debug("running check", check=check, size=size)
        reports.append(runners[check](size))

    if fmt == "json":
        payload = {"ok": all(r.ok for r in reports), "reports": [report_to_dict(r) for r in reports]}
        sys.stdout.write(dumps(payload).decode() + "\n")
    else:
        make_console().print(report_table(reports))
        for report in reports:
            for line in mismatch_lines(report):
                print(line, file=sys.stderr)

    return 0 if all(r.ok for r in reports) else 1
