"""
AltPeaks Bijections
===================

The chain linking alternating permutations with a given peak set to
arc diagrams with the same closer set:

    alternating p --reverse--> up-down word --tau--> cycle up-down
    permutation with even cycles --arc diagram--> MatchingPair

Even length words map onto all pairs of independent matchings; odd
length words are first extended by a trailing 0 and map onto the
pairs whose union is a single cycle.

Example:
    pair = even_encode(Permutation.from_word([5, 3, 8, 1, 4, 2, 7, 6]))
    str(pair.above)   # {1,8},{2,4},{3,5},{6,7}
    str(pair.below)   # {1,5},{2,4},{3,8},{6,7}
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from altpeaks.core.matchings import (
    Matching,
    MatchingError,
    MatchingPair,
    union_cycle_count,
)
from altpeaks.core.permcore import (
    CycleFormError,
    CyclePermutation,
    Permutation,
    all_cycles_even,
    is_alternating,
    is_cycle_up_down,
    is_up_down,
    left_to_right_minima,
    reverse,
)


class BijectionError(ValueError):
    """
    Input outside the domain of a bijection.

    Attributes:
        invariant: Short name of the violated invariant
    """

    def __init__(self, invariant: str, message: str) -> None:
        super().__init__(f"[{invariant}] {message}")
        self.invariant = invariant


def tau(p: Permutation) -> CyclePermutation:
    """
    Cut an up-down word at its left-to-right minima into cycles.

    Args:
        p: Up-down permutation of even length

    Returns:
        Cycle up-down permutation with only even cycles

    Raises:
        BijectionError: If p is not up-down or has odd length
    """
    if len(p) % 2:
        raise BijectionError("tau/even-length", f"word {p} has odd length {len(p)}")
    if not is_up_down(p):
        raise BijectionError("tau/up-down", f"word {p} is not up-down")

    starts = [position - 1 for position, _ in left_to_right_minima(p)]
    bounds = starts[1:] + [len(p)]
    cycles = tuple(p.word[a:b] for a, b in zip(starts, bounds))
    return CyclePermutation(cycles=cycles)


def tau_inverse(cp: CyclePermutation) -> Permutation:
    """
    Erase the parentheses of a canonical cycle up-down permutation.

    Raises:
        BijectionError: If cp is not cycle up-down with even cycles
    """
    if not is_cycle_up_down(cp):
        raise BijectionError("tau/cycle-up-down", f"{cp} has a cycle that is not up-down")
    if not all_cycles_even(cp):
        raise BijectionError("tau/even-cycles", f"{cp} has an odd cycle")

    word = tuple(v for cycle in cp.cycles for v in cycle)
    return Permutation(labels=cp.labels, word=word)


def to_arc_diagram(cp: CyclePermutation) -> MatchingPair:
    """
    Draw i -> cp(i) above the line when i < cp(i), below otherwise.

    Raises:
        BijectionError: If cp has a fixed point or an odd cycle
    """
    if not all_cycles_even(cp):
        raise BijectionError("arc-diagram/even-cycles", f"{cp} has an odd or singleton cycle")

    above: List[Tuple[int, int]] = []
    below: List[Tuple[int, int]] = []
    for cycle in cp.cycles:
        for index, a in enumerate(cycle):
            b = cycle[(index + 1) % len(cycle)]
            if a < b:
                above.append((a, b))
            else:
                below.append((b, a))

    labels = cp.labels
    try:
        return MatchingPair(
            above=Matching.from_arcs(above, labels),
            below=Matching.from_arcs(below, labels),
        )
    except MatchingError as e:
        raise BijectionError("arc-diagram/matchings", str(e)) from e


def from_arc_diagram(pair: MatchingPair) -> CyclePermutation:
    """
    Read the permutation off an arc diagram.

    Openers travel along their above arc to its closer, closers travel
    along their below arc back to its opener.

    Raises:
        BijectionError: If the diagram does not encode a cycle up-down
            permutation with even cycles
    """
    if pair.above.labels != pair.below.labels:
        raise BijectionError("matching-pair/labels", "above and below label sets differ")

    image: Dict[int, int] = {}
    for opener, closer in pair.above.arcs:
        image[opener] = closer
    for opener, closer in pair.below.arcs:
        if closer in image:
            raise BijectionError(
                "matching-pair/opener-sets", f"label {closer} closes a below arc but opens above"
            )
        image[closer] = opener
    if len(image) != len(pair.labels):
        raise BijectionError("matching-pair/opener-sets", "opener sets of above and below differ")

    cycles: List[List[int]] = []
    visited: set[int] = set()
    for start in pair.labels:
        if start in visited:
            continue
        cycle = [start]
        visited.add(start)
        current = image[start]
        while current != start:
            cycle.append(current)
            visited.add(current)
            current = image[current]
        cycles.append(cycle)

    try:
        cp = CyclePermutation.from_cycles(cycles)
    except CycleFormError as e:
        raise BijectionError("matching-pair/cycle-form", str(e)) from e
    return cp


def even_encode(p: Permutation) -> MatchingPair:
    """
    Alternating permutation of [2k] to a pair of independent matchings.

    The closer set of the result is the peak set of p.

    Raises:
        BijectionError: If p is not alternating on [2k]
    """
    n = len(p)
    if n % 2 or p.labels != tuple(range(1, n + 1)):
        raise BijectionError("even/labels", f"expected a permutation of [2k], got labels {list(p.labels)}")
    if not is_alternating(p):
        raise BijectionError("even/alternating", f"{p} is not alternating")
    return to_arc_diagram(tau(reverse(p)))


def even_decode(pair: MatchingPair) -> Permutation:
    """
    Pair of matchings on [2k] back to its alternating permutation.

    Raises:
        BijectionError: If the pair is not a valid arc diagram on [2k]
    """
    n = len(pair.labels)
    if pair.labels != tuple(range(1, n + 1)):
        raise BijectionError("even/labels", f"expected labels [2k], got {list(pair.labels)}")
    return reverse(tau_inverse(from_arc_diagram(pair)))


def odd_embed(p: Permutation) -> Permutation:
    """Append a trailing 0, giving an alternating word on {0, ..., 2k+1}."""
    return Permutation(labels=(0,) + p.labels, word=p.word + (0,))


def odd_encode(p: Permutation) -> MatchingPair:
    """
    Alternating permutation of [2k+1] to a single-cycle arc diagram
    on {0, ..., 2k+1}.

    Raises:
        BijectionError: If p is not alternating on [2k+1]
    """
    n = len(p)
    if n % 2 == 0 or p.labels != tuple(range(1, n + 1)):
        raise BijectionError("odd/labels", f"expected a permutation of [2k+1], got labels {list(p.labels)}")
    if not is_alternating(p):
        raise BijectionError("odd/alternating", f"{p} is not alternating")
    return to_arc_diagram(tau(reverse(odd_embed(p))))


def odd_decode(pair: MatchingPair) -> Permutation:
    """
    Single-cycle arc diagram on {0, ..., 2k+1} back to its alternating
    permutation of [2k+1].

    Raises:
        BijectionError: If the labels are wrong or the diagram closes a
            circle before the last closer (more than one cycle)
    """
    n = len(pair.labels)
    if pair.labels != tuple(range(0, n)):
        raise BijectionError("odd/labels", f"expected labels {{0,...,2k+1}}, got {list(pair.labels)}")
    cycles = union_cycle_count(pair)
    if cycles != 1:
        raise BijectionError(
            "odd/single-cycle", f"arcs form {cycles} closed circles, expected exactly one"
        )

    extended = reverse(tau_inverse(from_arc_diagram(pair)))
    return Permutation(labels=extended.labels[1:], word=extended.word[:-1])
