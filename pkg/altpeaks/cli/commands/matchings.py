"""
AltPeaks CLI Matchings Command
==============================

Stream the perfect matchings on [n] whose closer set is given, as
JSON lines or as one-sided arc drawings.
"""

from __future__ import annotations

import sys

from altpeaks.cli.codec import dumps, matching_to_dict
from altpeaks.cli.render import ascii_matching
from altpeaks.core.matchings import (
    MatchingError,
    count_matchings_with_closers,
    enumerate_matchings_with_closers,
)
from altpeaks.core.permcore import PeakSet


def list_matchings(closers_text: str, n: int, fmt: str = "text", count_only: bool = False) -> int:
    """
    Print every matching on [n] with the given closer set.

    Returns:
        Exit code
    """
    if n < 2 or n % 2:
        raise MatchingError(f"--n must be a positive even number, got {n}")
    closers = PeakSet.parse(closers_text)
    k = n // 2
    labels = list(range(1, n + 1))

    formula = count_matchings_with_closers(closers, k)

    if count_only:
        enumerated = sum(1 for _ in enumerate_matchings_with_closers(closers, labels))
        if fmt == "json":
            sys.stdout.write(dumps({"formula": formula, "enumerated": enumerated}).decode() + "\n")
        else:
            relation = "=" if formula == enumerated else "!="
            print(f"{formula} {relation} {enumerated}")
        return 0 if formula == enumerated else 1

    count = 0
    for matching in enumerate_matchings_with_closers(closers, labels):
        count += 1
        if fmt == "json":
            sys.stdout.write(dumps(matching_to_dict(matching)).decode() + "\n")
        else:
            print(matching)
            print(ascii_matching(matching))
            print()
    if fmt != "json":
        print(f"{count} matching{'s' if count != 1 else ''}")
    return 0
