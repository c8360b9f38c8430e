"""
AltPeaks Brute-Force Generators
===============================

Independent generators used as oracles for the formulas and
bijections, plus factorial definition filters that serve as oracles
for the generators themselves at tiny sizes.

- gen_alternating: pruned backtracking over prefixes
- gen_cycle_updown_even: cycle-by-cycle backtracking
- gen_all_matchings: every perfect matching of a label set
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, List, Optional, Tuple

from altpeaks.core.matchings import Matching
from altpeaks.core.permcore import (
    CyclePermutation,
    Permutation,
    all_cycles_even,
    is_alternating,
    is_cycle_up_down,
    reverse,
    to_cycle_form,
)

Word = Tuple[int, ...]


def _extend_alternating(prefix: List[int], remaining: List[int]) -> Iterator[Word]:
    if not remaining:
        yield tuple(prefix)
        return

    index = len(prefix)
    last = prefix[-1] if prefix else None
    descent = index % 2 == 1

    for slot, value in enumerate(remaining):
        if last is not None:
            if descent and value > last:
                break
            if not descent and value < last:
                continue
        rest = remaining[:slot] + remaining[slot + 1:]
        # the step after this one must still be possible
        if rest:
            if descent and rest[-1] < value:
                continue
            if not descent and rest[0] > value:
                continue
        prefix.append(value)
        yield from _extend_alternating(prefix, rest)
        prefix.pop()


def alternating_words(n: int, first: Optional[int] = None) -> Iterator[Word]:
    """
    Alternating words of [n] in lexicographic order.

    Args:
        n: Length
        first: Restrict to words starting with this value (one shard)
    """
    labels = list(range(1, n + 1))
    if first is None:
        yield from _extend_alternating([], labels)
        return
    if first not in labels:
        return
    rest = [v for v in labels if v != first]
    if rest and rest[0] > first:
        return
    yield from _extend_alternating([first], rest)


def gen_alternating(n: int, first: Optional[int] = None) -> Iterator[Permutation]:
    """Every alternating permutation of [n], each exactly once."""
    labels = tuple(range(1, n + 1))
    for word in alternating_words(n, first):
        yield Permutation(labels=labels, word=word)


def gen_up_down(n: int) -> Iterator[Permutation]:
    """
    Every up-down permutation of [n].

    Even n: reverses of the alternating words. Odd n: complements
    (v -> n + 1 - v), since reversing an odd alternating word gives
    another alternating word.
    """
    for p in gen_alternating(n):
        if n % 2 == 0:
            yield reverse(p)
        else:
            yield Permutation(labels=p.labels, word=tuple(n + 1 - v for v in p.word))


def filter_alternating(n: int) -> List[Permutation]:
    """Definition filter over all n! words, in lexicographic order."""
    labels = tuple(range(1, n + 1))
    candidates = (Permutation(labels=labels, word=w) for w in itertools.permutations(labels))
    return [p for p in candidates if is_alternating(p)]


def _extend_cycle(
    cycle: List[int],
    remaining: List[int],
    cycles: List[Tuple[int, ...]],
) -> Iterator[List[Tuple[int, ...]]]:
    if len(cycle) % 2 == 0:
        closed = cycles + [tuple(cycle)]
        if remaining:
            yield from _open_cycle(remaining, closed)
        else:
            yield closed

    last = cycle[-1]
    ascending = len(cycle) % 2 == 1
    for slot, value in enumerate(remaining):
        if ascending != (value > last):
            continue
        cycle.append(value)
        yield from _extend_cycle(cycle, remaining[:slot] + remaining[slot + 1:], cycles)
        cycle.pop()


def _open_cycle(
    remaining: List[int],
    cycles: List[Tuple[int, ...]],
) -> Iterator[List[Tuple[int, ...]]]:
    # the smallest unused label is the minimum of the next cycle
    yield from _extend_cycle([remaining[0]], remaining[1:], cycles)


def gen_cycle_updown_even(k: int) -> Iterator[CyclePermutation]:
    """Every cycle up-down permutation of [2k] whose cycles are all even."""
    labels = list(range(1, 2 * k + 1))
    if not labels:
        yield CyclePermutation(cycles=())
        return
    for cycles in _open_cycle(labels, []):
        yield CyclePermutation(cycles=tuple(reversed(cycles)))


def filter_cycle_updown_even(k: int) -> List[CyclePermutation]:
    """Definition filter over all (2k)! permutations."""
    labels = tuple(range(1, 2 * k + 1))
    result: List[CyclePermutation] = []
    for word in itertools.permutations(labels):
        cp = to_cycle_form(Permutation(labels=labels, word=word))
        if is_cycle_up_down(cp) and all_cycles_even(cp):
            result.append(cp)
    return result


def _pairings(items: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for index, partner in enumerate(rest):
        for pairing in _pairings(rest[:index] + rest[index + 1:]):
            yield [(first, partner)] + pairing


def gen_all_matchings(labels: Iterable[int]) -> Iterator[Matching]:
    """Every perfect matching of `labels`, by pairing the smallest label first."""
    label_list = sorted(labels)
    for pairing in _pairings(label_list):
        yield Matching.from_arcs(pairing, label_list)
