"""
AltPeaks Matchings
==================

Perfect matchings on an ordered label set and arc diagrams.

A matching is drawn with its labels on a horizontal line; each arc
joins an opener (smaller endpoint) to a closer (larger endpoint).
A MatchingPair is an arc diagram: an above matching and a below
matching sharing the same opener and closer sets.

Enumeration is closer-driven: closers are visited left to right
and each picks one of the openers still waiting to its left.

Example:
    closers = PeakSet.of([4, 5, 7, 8])
    count_matchings_with_closers(closers, 4)                       # 12
    sum(1 for _ in enumerate_matchings_with_closers(closers, range(1, 9)))  # 12
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from altpeaks.core.permcore import PeakSet

Arc = Tuple[int, int]


class MatchingError(ValueError):
    """Malformed matching, pair or closer set."""
    pass


@dataclass(frozen=True)
class Matching:
    """
    Partition of an even-size label set into arcs.

    Arcs are stored as (opener, closer) pairs sorted by closer.

    Attributes:
        labels: Strictly increasing labels
        arcs: Canonical arc list
    """

    labels: Tuple[int, ...]
    arcs: Tuple[Arc, ...]

    def __post_init__(self) -> None:
        if any(b <= a for a, b in zip(self.labels, self.labels[1:])):
            raise MatchingError(f"labels must be strictly increasing: {list(self.labels)}")
        if len(self.labels) % 2:
            raise MatchingError(f"a matching needs an even number of labels, got {len(self.labels)}")
        endpoints = sorted(v for arc in self.arcs for v in arc)
        if endpoints != list(self.labels):
            raise MatchingError(f"arcs {self.arcs_list()} do not partition labels {list(self.labels)}")
        for opener, closer in self.arcs:
            if opener >= closer:
                raise MatchingError(f"arc ({opener},{closer}) must list its opener first")
        if any(b[1] <= a[1] for a, b in zip(self.arcs, self.arcs[1:])):
            raise MatchingError("arcs must be sorted by closer")

    @classmethod
    def from_arcs(
        cls,
        arcs: Iterable[Sequence[int]],
        labels: Optional[Iterable[int]] = None,
    ) -> "Matching":
        """
        Build a matching from unordered label pairs.

        Args:
            arcs: Two-element blocks in any order and orientation
            labels: Label set (defaults to the union of the arcs)

        Raises:
            MatchingError: If a block does not have two distinct labels
        """
        normalised: List[Arc] = []
        for arc in arcs:
            pair = tuple(int(v) for v in arc)
            if len(pair) != 2 or pair[0] == pair[1]:
                raise MatchingError(f"arc {list(pair)} must join two distinct labels")
            normalised.append((min(pair), max(pair)))
        normalised.sort(key=lambda a: a[1])
        label_tuple = (
            tuple(sorted(labels))
            if labels is not None
            else tuple(sorted(v for arc in normalised for v in arc))
        )
        return cls(labels=label_tuple, arcs=tuple(normalised))

    def partner(self) -> Dict[int, int]:
        """Map every label to the other endpoint of its arc."""
        result: Dict[int, int] = {}
        for opener, closer in self.arcs:
            result[opener] = closer
            result[closer] = opener
        return result

    def arcs_list(self) -> List[List[int]]:
        return [[o, c] for o, c in self.arcs]

    def __str__(self) -> str:
        return ",".join("{" + f"{o},{c}" + "}" for o, c in sorted(self.arcs))


@dataclass(frozen=True)
class MatchingPair:
    """
    Arc diagram: above and below matchings on one label set whose
    opener sets (and so closer sets) agree.
    """

    above: Matching
    below: Matching

    def __post_init__(self) -> None:
        if self.above.labels != self.below.labels:
            raise MatchingError("above and below matchings must share one label set")
        if opener_set(self.above) != opener_set(self.below):
            raise MatchingError(
                f"opener sets differ: above {opener_set(self.above)}, "
                f"below {opener_set(self.below)}"
            )

    @property
    def labels(self) -> Tuple[int, ...]:
        return self.above.labels

    @property
    def closers(self) -> PeakSet:
        return closer_set(self.above)


def closer_set(m: Matching) -> PeakSet:
    """Larger endpoints of all arcs, sorted."""
    return PeakSet.of(closer for _, closer in m.arcs)


def opener_set(m: Matching) -> Tuple[int, ...]:
    """Smaller endpoints of all arcs, sorted."""
    return tuple(sorted(opener for opener, _ in m.arcs))


def double_factorial(m: int) -> int:
    """m!! with (-1)!! = 0!! = 1."""
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


def count_all_matchings(k: int) -> int:
    """
    Number of perfect matchings on [2k], (2k-1)!!.

    Raises:
        MatchingError: If k is negative
    """
    if k < 0:
        raise MatchingError(f"k must be non-negative, got {k}")
    return double_factorial(2 * k - 1)


def lemma_factors(closers: PeakSet, offset: int = 1) -> List[int]:
    """
    Opener choices available to each closer but the last.

    With `offset` 1 (labels [2k]) the j-th factor is i_j - 2j + 1;
    with `offset` 2 (labels {0} u [2k+1]) it is i_j - 2j + 2.
    """
    return [i - 2 * j + offset for j, i in enumerate(closers.values[:-1], start=1)]


def _product_or_zero(factors: Iterable[int]) -> int:
    result = 1
    for factor in factors:
        if factor < 1:
            return 0
        result *= factor
    return result


def count_matchings_with_closers(closers: PeakSet, k: int) -> int:
    """
    Number of matchings on [2k] whose closer set is `closers`.

    Returns the product of (i_j - 2j + 1) over j <= k-1, or 0 when a
    prefix runs out of openers or 2k is not a closer.

    Raises:
        MatchingError: If |closers| != k or an entry lies outside [2k]
    """
    if len(closers) != k:
        raise MatchingError(f"expected {k} closers, got {len(closers)}")
    if k == 0:
        return 1
    if closers.max > 2 * k:
        raise MatchingError(f"closer {closers.max} lies outside [1, {2 * k}]")
    if closers.max != 2 * k:
        return 0
    return _product_or_zero(lemma_factors(closers))


def _check_closers(closers: PeakSet, labels: Tuple[int, ...]) -> None:
    missing = [c for c in closers if c not in set(labels)]
    if missing:
        raise MatchingError(f"closers {missing} are not labels")


def _match_closers(
    closer_list: Tuple[int, ...],
    opener_list: Tuple[int, ...],
    index: int,
    used: List[bool],
    arcs: List[Arc],
) -> Iterator[List[Arc]]:
    if index == len(closer_list):
        if all(used):
            yield list(arcs)
        return

    closer = closer_list[index]
    for slot, opener in enumerate(opener_list):
        if opener > closer:
            break
        if used[slot]:
            continue
        used[slot] = True
        arcs.append((opener, closer))
        yield from _match_closers(closer_list, opener_list, index + 1, used, arcs)
        arcs.pop()
        used[slot] = False


def enumerate_matchings_with_closers(
    closers: PeakSet,
    labels: Iterable[int],
) -> Iterator[Matching]:
    """
    Lazily yield every matching on `labels` with closer set `closers`.

    Closers are processed left to right; each one takes a still-unused
    opener to its left, in increasing order, so the stream order is
    deterministic.

    Raises:
        MatchingError: If a closer is not a label
    """
    label_tuple = tuple(sorted(labels))
    _check_closers(closers, label_tuple)
    if len(label_tuple) != 2 * len(closers):
        return

    opener_list = tuple(v for v in label_tuple if v not in closers)
    used = [False] * len(opener_list)
    for arcs in _match_closers(closers.values, opener_list, 0, used, []):
        yield Matching(labels=label_tuple, arcs=tuple(arcs))


def enumerate_independent_pairs(
    closers: PeakSet,
    labels: Iterable[int],
) -> Iterator[MatchingPair]:
    """
    Every arc diagram with the given closer set: the Cartesian
    square of the matching stream.
    """
    matchings = list(enumerate_matchings_with_closers(closers, labels))
    for above, below in itertools.product(matchings, repeat=2):
        yield MatchingPair(above=above, below=below)


def union_cycle_count(pair: MatchingPair) -> int:
    """Connected components of the union multigraph of both matchings."""
    above = pair.above.partner()
    below = pair.below.partner()
    unvisited = set(pair.labels)
    components = 0

    while unvisited:
        start = min(unvisited)
        components += 1
        current = start
        use_above = True
        # every vertex has one above and one below arc: walk alternately
        while True:
            unvisited.discard(current)
            current = above[current] if use_above else below[current]
            use_above = not use_above
            if current == start and use_above:
                break

    return components


def circle_closing_opener(
    closer: int,
    above: Dict[int, int],
    below_drawn: Dict[int, int],
) -> Optional[int]:
    """
    Opener whose below arc to `closer` would close a circle.

    Follows the path starting at `closer` along its above arc, then
    alternately along drawn below arcs and above arcs, until it reaches
    a vertex with no drawn below arc.

    Args:
        closer: Closer about to receive its below arc
        above: Partner map of the above matching
        below_drawn: Partner map of the below arcs drawn so far

    Returns:
        The path endpoint if it is an opener left of `closer`, else None
    """
    current = above[closer]
    while current in below_drawn:
        current = above[below_drawn[current]]
    if current < closer and current not in below_drawn:
        return current
    return None


def _single_cycle_below(
    closer_list: Tuple[int, ...],
    opener_list: Tuple[int, ...],
    above: Dict[int, int],
    index: int,
    below_drawn: Dict[int, int],
    arcs: List[Arc],
) -> Iterator[List[Arc]]:
    if index == len(closer_list):
        yield list(arcs)
        return

    closer = closer_list[index]
    last = index == len(closer_list) - 1
    excluded = None if last else circle_closing_opener(closer, above, below_drawn)

    for opener in opener_list:
        if opener > closer:
            break
        if opener in below_drawn or opener == excluded:
            continue
        below_drawn[opener] = closer
        below_drawn[closer] = opener
        arcs.append((opener, closer))
        yield from _single_cycle_below(
            closer_list, opener_list, above, index + 1, below_drawn, arcs
        )
        arcs.pop()
        del below_drawn[opener]
        del below_drawn[closer]


def enumerate_single_cycle_pairs(
    closers: PeakSet,
    labels: Iterable[int],
) -> Iterator[MatchingPair]:
    """
    Lazily yield every arc diagram whose union is one cycle.

    The above matching is chosen freely; the below matching is built
    left to right, and for every closer but the last the opener that
    would close a circle among the arcs drawn so far is skipped.

    Raises:
        MatchingError: If 0 is not a label, 0 is a closer, or a closer
            is not a label
    """
    label_tuple = tuple(sorted(labels))
    if 0 not in label_tuple:
        raise MatchingError("single-cycle enumeration needs the extra opener 0 among the labels")
    if 0 in closers:
        raise MatchingError("0 cannot be a closer")
    _check_closers(closers, label_tuple)

    opener_list = tuple(v for v in label_tuple if v not in closers)
    for above in enumerate_matchings_with_closers(closers, label_tuple):
        partner = above.partner()
        for arcs in _single_cycle_below(closers.values, opener_list, partner, 0, {}, []):
            arcs.sort(key=lambda a: a[1])
            yield MatchingPair(above=above, below=Matching(labels=label_tuple, arcs=tuple(arcs)))


def _check_odd_closers(closers: PeakSet) -> None:
    k = len(closers) - 1
    if k < 0:
        raise MatchingError("closer set must not be empty")
    if closers.max != 2 * k + 1:
        raise MatchingError(
            f"the last of {k + 1} closers must be {2 * k + 1}, got {closers.max}"
        )


def count_odd_above(closers: PeakSet) -> int:
    """
    Above matchings on {0, ..., 2k+1} with closer set {i_1 < ... < i_{k+1}}:
    the product of (i_j - 2j + 2) over j <= k, or 0.

    Raises:
        MatchingError: If the last closer is not 2k+1
    """
    _check_odd_closers(closers)
    return _product_or_zero(lemma_factors(closers, offset=2))


def count_odd_below(closers: PeakSet) -> int:
    """
    Below matchings completing a given above matching to a single
    cycle: the product of (i_j - 2j + 1) over j <= k, or 0.

    Raises:
        MatchingError: If the last closer is not 2k+1
    """
    _check_odd_closers(closers)
    return _product_or_zero(lemma_factors(closers, offset=1))
