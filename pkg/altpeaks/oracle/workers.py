"""
AltPeaks Shard Pool
===================

Fans independent shards of an exhaustive computation out to worker
processes and returns their results in shard order, so merged output
is deterministic regardless of completion order.

With one job (or a single shard) everything runs in-process.

Example:
    pool = ShardPool(jobs=4)
    partials = pool.map(census_shard, [(9, first) for first in range(1, 10)])
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple, TypeVar

from altpeaks.core.config import get_config
from altpeaks.utils.logger import get_logger

R = TypeVar("R")

logger = get_logger("altpeaks.workers")


@dataclass
class PoolStats:
    """
    Pool statistics.

    Attributes:
        shards: Shards submitted
        completed: Shards finished
        jobs: Worker processes used for the last map
    """

    shards: int = 0
    completed: int = 0
    jobs: int = 0


class ShardPool:
    """
    Process pool for embarrassingly parallel shards.

    Args:
        jobs: Worker processes (defaults to config `workers.jobs`)
    """

    def __init__(self, jobs: Optional[int] = None) -> None:
        configured = jobs if jobs is not None else get_config().get_int("workers.jobs", 1)
        self._jobs = max(1, configured)
        self._stats = PoolStats()

    @property
    def jobs(self) -> int:
        return self._jobs

    def map(
        self,
        func: Callable[..., R],
        shards: Sequence[Tuple[Any, ...]],
    ) -> List[R]:
        """
        Apply `func(*shard)` to every shard.

        `func` must be a module-level function so it can be pickled.

        Returns:
            Results in the order of `shards`
        """
        self._stats.shards += len(shards)
        workers = min(self._jobs, len(shards))
        self._stats.jobs = max(workers, 1)

        if workers <= 1:
            results: List[R] = []
            for shard in shards:
                results.append(func(*shard))
                self._stats.completed += 1
            return results

        logger.debug("dispatching shards", shards=len(shards), jobs=workers)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(func, *shard) for shard in shards]
            collected: List[R] = []
            for future in futures:
                collected.append(future.result())
                self._stats.completed += 1
        return collected

    def stats(self) -> PoolStats:
        """Get pool statistics."""
        return self._stats
