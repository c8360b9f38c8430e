"""
AltPeaks Peak-Set Census
========================

Exhaustive count of alternating permutations of [n] grouped by peak
set. The backtracking tree is sharded by first element; partial
counts are merged and sorted so the result does not depend on the
number of workers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from altpeaks.core.permcore import PeakSet, peak_tuple
from altpeaks.oracle.generators import alternating_words
from altpeaks.oracle.workers import ShardPool
from altpeaks.utils.logger import get_logger

logger = get_logger("altpeaks.census")


@dataclass(frozen=True)
class Census:
    """
    Peak-set census of the alternating permutations of [n].

    Attributes:
        n: Permutation length
        entries: Peak set -> number of permutations, sorted by peak set
        total: Sum of all entries
    """

    n: int
    entries: Dict[PeakSet, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def count(self, peaks: PeakSet) -> int:
        """Census count for `peaks` (0 when no permutation has it)."""
        return self.entries.get(peaks, 0)


def census_shard(n: int, first: int) -> Dict[Tuple[int, ...], int]:
    """Peak-set counts of the alternating words of [n] starting with `first`."""
    counts: Counter[Tuple[int, ...]] = Counter()
    for word in alternating_words(n, first):
        counts[peak_tuple(word)] += 1
    logger.with_context(n=n, first=first).debug("shard finished", words=sum(counts.values()))
    return dict(counts)


def merge_counts(partials: List[Dict[Tuple[int, ...], int]]) -> Dict[Tuple[int, ...], int]:
    """Associative merge of shard results, keys sorted."""
    merged: Counter[Tuple[int, ...]] = Counter()
    for partial in partials:
        merged.update(partial)
    return {key: merged[key] for key in sorted(merged)}


def peak_set_census(n: int, jobs: Optional[int] = None) -> Census:
    """
    Group every alternating permutation of [n] by its peak set.

    Args:
        n: n >= 1
        jobs: Worker processes (defaults to config `workers.jobs`)
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")

    pool = ShardPool(jobs)
    shards = [(n, first) for first in range(1, n + 1)]
    merged = merge_counts(pool.map(census_shard, shards))

    census = Census(n=n, entries={PeakSet(values=key): count for key, count in merged.items()})
    logger.info("census complete", n=n, peak_sets=len(census.entries), total=census.total, jobs=pool.jobs)
    return census
