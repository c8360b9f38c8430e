"""
AltPeaks Counting Formulas
==========================

Closed-form counts of alternating permutations by peak set:

- s_count: permutations of [2k] with peak set {i_1 < ... < i_k = 2k},
  the product of (i_j - 2j + 1)^2 over j <= k-1
- t_count: permutations of [2k+1] with peak set
  {i_1 < ... < i_{k+1} = 2k+1}, the product of
  (i_j - 2j + 2)(i_j - 2j + 1) over j <= k
- euler_number: E_n from the boustrophedon (Entringer) triangle

Counts are exact Python integers guarded by a configurable bit width
so values that would not fit a fixed-width integer are reported
instead of silently accepted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from altpeaks.core.config import get_config
from altpeaks.core.permcore import PeakSet, PeakSetError


class CapacityError(OverflowError):
    """Requested size exceeds the configured integer capacity."""
    pass


@dataclass(frozen=True)
class CountReport:
    """
    Formula value for one peak set.

    Attributes:
        peak_set: The peak set counted
        formula_count: Product of the factors, or 0 if any factor < 1
        factors: Every multiplicand before clamping
    """

    peak_set: PeakSet
    formula_count: int
    factors: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def feasible(self) -> bool:
        return self.formula_count > 0

    @classmethod
    def from_factors(cls, peak_set: PeakSet, factors: List[int]) -> "CountReport":
        count = 1
        for factor in factors:
            if factor < 1:
                count = 0
                break
            count *= factor
        _check_width(count)
        return cls(peak_set=peak_set, formula_count=count, factors=tuple(factors))


def _check_width(value: int, bits: Optional[int] = None) -> int:
    width = bits if bits is not None else get_config().get_int("limits.bits", 128)
    if value.bit_length() > width - 1:
        raise CapacityError(f"value needs {value.bit_length() + 1} bits, limit is {width}")
    return value


def _check_peak_shape(peaks: PeakSet, size: int, n: int) -> None:
    if len(peaks) != size:
        raise PeakSetError(f"expected {size} peak values for n={n}, got {len(peaks)}")
    if peaks.max != n:
        raise PeakSetError(f"the largest peak must be n={n}, got {peaks.max}")
    if n >= 2 and peaks.values[0] < 2:
        raise PeakSetError(f"peak values must be at least 2 for n={n}")


def s_count(peaks: PeakSet, k: int) -> CountReport:
    """
    Alternating permutations of [2k] with the given peak set.

    Args:
        peaks: {i_1 < ... < i_k} with i_k = 2k
        k: Half the length, k >= 1

    Raises:
        PeakSetError: If the peak set has the wrong size or maximum
    """
    if k < 1:
        raise PeakSetError(f"k must be at least 1, got {k}")
    _check_peak_shape(peaks, k, 2 * k)

    factors: List[int] = []
    for j, i in enumerate(peaks.values[:-1], start=1):
        # one choice for the above matching, one for the below matching
        factors.extend((i - 2 * j + 1, i - 2 * j + 1))
    return CountReport.from_factors(peaks, factors)


def t_count(peaks: PeakSet, k: int) -> CountReport:
    """
    Alternating permutations of [2k+1] with the given peak set.

    Args:
        peaks: {i_1 < ... < i_{k+1}} with i_{k+1} = 2k+1
        k: k >= 0

    Raises:
        PeakSetError: If the peak set has the wrong size or maximum
    """
    if k < 0:
        raise PeakSetError(f"k must be non-negative, got {k}")
    _check_peak_shape(peaks, k + 1, 2 * k + 1)

    factors: List[int] = []
    for j, i in enumerate(peaks.values[:-1], start=1):
        factors.extend((i - 2 * j + 2, i - 2 * j + 1))
    return CountReport.from_factors(peaks, factors)


def peak_count(peaks: PeakSet, n: int) -> CountReport:
    """Dispatch to s_count or t_count on the parity of n."""
    if n < 1:
        raise PeakSetError(f"n must be positive, got {n}")
    if n % 2 == 0:
        return s_count(peaks, n // 2)
    return t_count(peaks, n // 2)


def _triangle_rows() -> Iterator[List[int]]:
    row = [1]
    while True:
        yield row
        m = len(row)
        following = [0]
        for i in range(1, m + 1):
            following.append(following[i - 1] + row[m - i])
        row = following


def entringer_triangle(n: int) -> List[List[int]]:
    """
    Rows 0..n of the boustrophedon triangle.

    Row m has m+1 entries and its last entry is E_m; each entry adds
    the previous entry of its row to the mirrored entry of the row above.
    """
    return list(itertools.islice(_triangle_rows(), n + 1))


def euler_number(n: int, cap: Optional[int] = None) -> int:
    """
    Number of alternating permutations of [n].

    Args:
        n: 0 <= n <= cap
        cap: Largest admissible n (defaults to config `limits.max_n`)

    Raises:
        CapacityError: If n exceeds the cap or E_n exceeds the bit width
        ValueError: If n is negative
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    limit = cap if cap is not None else get_config().get_int("limits.max_n", 30)
    if n > limit:
        raise CapacityError(f"n={n} exceeds the configured cap {limit}")
    return _check_width(entringer_triangle(n)[n][-1])


def euler_numbers(max_n: int, cap: Optional[int] = None) -> List[int]:
    """E_0, ..., E_max_n."""
    limit = cap if cap is not None else get_config().get_int("limits.max_n", 30)
    if max_n > limit:
        raise CapacityError(f"n={max_n} exceeds the configured cap {limit}")
    return [_check_width(row[-1]) for row in entringer_triangle(max_n)]


def candidate_peak_sets(n: int) -> Iterator[PeakSet]:
    """
    Every increasing sequence of the peak-set shape ending at n.

    For n = 2k, k-element sets; for n = 2k+1, (k+1)-element sets; all
    other entries drawn from {2, ..., n-1}, in lexicographic order.
    Sets with formula count 0 are included.
    """
    if n < 1:
        return
    if n == 1:
        yield PeakSet.of([1])
        return

    size = n // 2 if n % 2 == 0 else n // 2 + 1
    for head in itertools.combinations(range(2, n), size - 1):
        yield PeakSet.of(head + (n,))


def max_safe_cap(bits: Optional[int] = None) -> int:
    """Largest n whose Euler number fits the signed bit width."""
    width = bits if bits is not None else get_config().get_int("limits.bits", 128)
    for n, row in enumerate(_triangle_rows()):
        if row[-1].bit_length() > width - 1:
            return n - 1
    raise AssertionError("unreachable")
