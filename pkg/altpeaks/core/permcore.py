"""
AltPeaks Permutation Core
=========================

Immutable permutation values and the structural predicates the
bijections are built on:

- Permutation: one-line notation over an explicit label set
- CyclePermutation: standard cycle form (min-first cycles,
  ordered by decreasing minimum)
- PeakSet: strictly increasing peak values, also used as a closer set

Labels are explicit so the odd-case embedding on {0, ..., 2k+1}
works without re-indexing. The label 0 is accepted everywhere
except in peak detection, where 0 is the boundary sentinel.

Example:
    p = Permutation.from_word([5, 3, 8, 1, 4, 2, 7, 6])
    is_alternating(p)            # True
    peak_values(p)               # PeakSet({4,5,7,8})
    reverse(p)                   # 6 7 2 4 1 8 3 5
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple


class PermutationError(ValueError):
    """Malformed permutation or violated permutation precondition."""
    pass


class CycleFormError(PermutationError):
    """Malformed cycle list or non-canonical cycle form."""
    pass


class PeakSetError(ValueError):
    """Peak set (or closer set) is not strictly increasing and positive."""
    pass


@dataclass(frozen=True)
class Permutation:
    """
    A bijection on a finite ordered label set, in one-line notation.

    Position i of `word` holds the image of the i-th smallest label.

    Attributes:
        labels: Strictly increasing non-negative labels
        word: Rearrangement of `labels`
    """

    labels: Tuple[int, ...]
    word: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b <= a for a, b in zip(self.labels, self.labels[1:])):
            raise PermutationError(f"labels must be strictly increasing: {list(self.labels)}")
        if self.labels and self.labels[0] < 0:
            raise PermutationError("labels must be non-negative")
        if len(self.word) != len(self.labels) or sorted(self.word) != list(self.labels):
            raise PermutationError(
                f"word {list(self.word)} is not a rearrangement of labels {list(self.labels)}"
            )

    @classmethod
    def from_word(
        cls,
        word: Iterable[int],
        labels: Optional[Iterable[int]] = None,
    ) -> "Permutation":
        """
        Build a permutation from its one-line word.

        Args:
            word: Sequence of labels
            labels: Label set (defaults to the sorted entries of `word`)

        Returns:
            Permutation

        Raises:
            PermutationError: If word is not a rearrangement of labels
        """
        word_tuple = tuple(int(v) for v in word)
        label_tuple = tuple(sorted(labels)) if labels is not None else tuple(sorted(word_tuple))
        return cls(labels=label_tuple, word=word_tuple)

    @classmethod
    def identity(cls, labels: Iterable[int]) -> "Permutation":
        """Identity permutation on the given labels."""
        label_tuple = tuple(sorted(labels))
        return cls(labels=label_tuple, word=label_tuple)

    def mapping(self) -> Dict[int, int]:
        """Map each label to its image."""
        return dict(zip(self.labels, self.word))

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.word)


@dataclass(frozen=True)
class CyclePermutation:
    """
    A permutation in standard cycle form.

    Every cycle starts at its minimum and cycles are ordered by
    strictly decreasing first entry, so the form is canonical.

    Example:
        CyclePermutation.from_cycles([[1, 8, 3, 5], [2, 4], [6, 7]])
        # (6,7)(2,4)(1,8,3,5)
    """

    cycles: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for cycle in self.cycles:
            if not cycle:
                raise CycleFormError("cycles must be non-empty")
            if cycle[0] != min(cycle):
                raise CycleFormError(f"cycle {cycle} does not start at its minimum")
            for value in cycle:
                if value in seen:
                    raise CycleFormError(f"label {value} appears in more than one position")
                if value < 0:
                    raise CycleFormError("labels must be non-negative")
                seen.add(value)
        firsts = [cycle[0] for cycle in self.cycles]
        if any(b >= a for a, b in zip(firsts, firsts[1:])):
            raise CycleFormError("cycles must be ordered by decreasing minimum")

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "CyclePermutation":
        """
        Canonicalise an arbitrary list of disjoint cycles.

        Each cycle is rotated to start at its minimum and the cycles are
        sorted by decreasing minimum.

        Raises:
            CycleFormError: If a cycle is empty or labels repeat
        """
        rotated: List[Tuple[int, ...]] = []
        for cycle in cycles:
            values = [int(v) for v in cycle]
            if not values:
                raise CycleFormError("cycles must be non-empty")
            start = values.index(min(values))
            rotated.append(tuple(values[start:] + values[:start]))
        rotated.sort(key=lambda c: c[0], reverse=True)
        return cls(cycles=tuple(rotated))

    @property
    def labels(self) -> Tuple[int, ...]:
        """All labels moved or fixed by the permutation, sorted."""
        return tuple(sorted(v for cycle in self.cycles for v in cycle))

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.cycles)

    def __str__(self) -> str:
        return "".join("(" + ",".join(str(v) for v in cycle) + ")" for cycle in self.cycles)


@dataclass(frozen=True, order=True)
class PeakSet:
    """
    Strictly increasing sequence of positive integers.

    Used both for the peak values of a permutation and for the
    closer set of a matching.
    """

    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v < 1 for v in self.values):
            raise PeakSetError(f"peak values must be positive: {list(self.values)}")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise PeakSetError(f"peak values must be strictly increasing: {list(self.values)}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "PeakSet":
        """Build from any iterable of integers, in the given order."""
        return cls(values=tuple(int(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> "PeakSet":
        """
        Parse a comma-separated list such as "4,5,7,8".

        Raises:
            PeakSetError: If a field is empty or not an integer, or the order is wrong
        """
        body = text.strip().strip("{}").strip()
        parts = [part.strip() for part in body.split(",")] if body else []
        if any(not part for part in parts):
            raise PeakSetError(f"empty field in peak set {text!r}")
        try:
            return cls.of(int(part) for part in parts)
        except ValueError as e:
            if isinstance(e, PeakSetError):
                raise
            raise PeakSetError(f"could not parse peak set {text!r}") from e

    @property
    def max(self) -> int:
        """Largest value (the forced last closer)."""
        return self.values[-1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __contains__(self, value: object) -> bool:
        return value in self.values

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.values) + "}"


def _alternates(word: Sequence[int], first_up: bool) -> bool:
    up = first_up
    for a, b in zip(word, word[1:]):
        if (a < b) != up or a == b:
            return False
        up = not up
    return True


def is_alternating(p: Permutation) -> bool:
    """True iff p_1 > p_2 < p_3 > ... (vacuous for length <= 1)."""
    return _alternates(p.word, first_up=False)


def is_up_down(p: Permutation) -> bool:
    """True iff p_1 < p_2 > p_3 < ... (vacuous for length <= 1)."""
    return _alternates(p.word, first_up=True)


def reverse(p: Permutation) -> Permutation:
    """Reverse the word; an involution on every permutation."""
    return Permutation(labels=p.labels, word=tuple(reversed(p.word)))


def peak_values(p: Permutation) -> PeakSet:
    """
    Values that exceed both neighbours, with 0 sentinels at both ends.

    Args:
        p: Permutation on positive labels

    Returns:
        Peak values in increasing order

    Raises:
        PermutationError: If 0 is a label
    """
    if p.labels and p.labels[0] == 0:
        raise PermutationError("peak detection needs positive labels; 0 is the sentinel")
    return PeakSet(values=peak_tuple(p.word))


def peak_tuple(word: Sequence[int]) -> Tuple[int, ...]:
    """Sorted peak values of a word of positive integers (no validation)."""
    padded = (0, *word, 0)
    return tuple(sorted(
        padded[i]
        for i in range(1, len(padded) - 1)
        if padded[i - 1] < padded[i] > padded[i + 1]
    ))


def left_to_right_minima(p: Permutation) -> List[Tuple[int, int]]:
    """
    Entries smaller than everything before them.

    Returns:
        (position, value) pairs with 1-based positions; values decrease
    """
    minima: List[Tuple[int, int]] = []
    for position, value in enumerate(p.word, start=1):
        if not minima or value < minima[-1][1]:
            minima.append((position, value))
    return minima


def is_cycle_up_down(cp: CyclePermutation) -> bool:
    """True iff every cycle word is up-down."""
    return all(_alternates(cycle, first_up=True) for cycle in cp.cycles)


def all_cycles_even(cp: CyclePermutation) -> bool:
    """True iff every cycle has even length."""
    return all(len(cycle) % 2 == 0 for cycle in cp.cycles)


def to_cycle_form(p: Permutation) -> CyclePermutation:
    """Convert one-line notation to canonical standard cycle form."""
    image = p.mapping()
    visited: set[int] = set()
    cycles: List[Tuple[int, ...]] = []

    # labels ascend, so each cycle is discovered from its minimum
    for start in p.labels:
        if start in visited:
            continue
        cycle = [start]
        visited.add(start)
        current = image[start]
        while current != start:
            cycle.append(current)
            visited.add(current)
            current = image[current]
        cycles.append(tuple(cycle))

    cycles.reverse()
    return CyclePermutation(cycles=tuple(cycles))


def from_cycle_form(
    cp: CyclePermutation,
    labels: Optional[Iterable[int]] = None,
) -> Permutation:
    """
    Compose the cycles into one-line notation.

    Args:
        cp: Cycle form
        labels: Expected label set; labels missing from the cycles are an error

    Raises:
        CycleFormError: If the cycles do not cover `labels` exactly
    """
    covered = cp.labels
    if labels is not None:
        expected = tuple(sorted(labels))
        if expected != covered:
            missing = sorted(set(expected) - set(covered))
            extra = sorted(set(covered) - set(expected))
            raise CycleFormError(f"cycle labels mismatch: missing {missing}, unexpected {extra}")

    image: Dict[int, int] = {}
    for cycle in cp.cycles:
        for index, value in enumerate(cycle):
            image[value] = cycle[(index + 1) % len(cycle)]

    return Permutation(labels=covered, word=tuple(image[label] for label in covered))
