import itertools

import pytest

from altpeaks.core.permcore import (
    CycleFormError,
    CyclePermutation,
    PeakSet,
    PeakSetError,
    Permutation,
    PermutationError,
    all_cycles_even,
    from_cycle_form,
    is_alternating,
    is_cycle_up_down,
    is_up_down,
    left_to_right_minima,
    peak_values,
    reverse,
    to_cycle_form,
)

EVEN_WORD = Permutation.from_word([5, 3, 8, 1, 4, 2, 7, 6])


def test_permutation_from_word_defaults_labels():
    p = Permutation.from_word([2, 3, 1])
    assert p.labels == (1, 2, 3)
    assert p.word == (2, 3, 1)
    assert p.mapping() == {1: 2, 2: 3, 3: 1}
    assert str(p) == "2 3 1"
    assert len(p) == 3


@pytest.mark.parametrize("word", [[1, 1, 2], [1, 3], [0, 2, 1, 5]])
def test_permutation_rejects_non_rearrangement(word):
    with pytest.raises(PermutationError):
        Permutation(labels=(1, 2, 3), word=tuple(word))


def test_permutation_rejects_unsorted_labels():
    with pytest.raises(PermutationError):
        Permutation(labels=(2, 1), word=(1, 2))


def test_is_alternating():
    assert is_alternating(EVEN_WORD)
    assert not is_alternating(Permutation.from_word([1, 2, 3]))
    assert is_alternating(Permutation.from_word([2, 1]))
    assert not is_alternating(Permutation.from_word([1, 2]))
    assert is_alternating(Permutation.from_word([1]))
    assert is_alternating(Permutation.from_word([]))


def test_is_up_down():
    assert is_up_down(Permutation.from_word([6, 7, 2, 4, 1, 8, 3, 5]))
    assert not is_up_down(EVEN_WORD)
    assert is_up_down(Permutation.from_word([1, 2]))


def test_reverse():
    assert reverse(EVEN_WORD).word == (6, 7, 2, 4, 1, 8, 3, 5)
    assert reverse(reverse(EVEN_WORD)) == EVEN_WORD
    assert is_up_down(reverse(EVEN_WORD))


def test_reverse_of_odd_length_alternating_is_alternating():
    p = Permutation.from_word([3, 1, 2])
    assert reverse(p).word == (2, 1, 3)
    assert is_alternating(reverse(p))


@pytest.mark.parametrize(
    "word, peaks",
    [
        ([5, 3, 8, 1, 4, 2, 7, 6], (4, 5, 7, 8)),
        ([8, 6, 7, 3, 4, 1, 9, 2, 5], (4, 5, 7, 8, 9)),
        ([2, 1], (2,)),
        ([1], (1,)),
        ([1, 2, 3], (3,)),
    ],
)
def test_peak_values(word, peaks):
    assert peak_values(Permutation.from_word(word)).values == peaks


def test_peak_values_rejects_zero_label():
    with pytest.raises(PermutationError):
        peak_values(Permutation.from_word([1, 0]))


def test_left_to_right_minima():
    up_down = Permutation.from_word([6, 7, 2, 4, 1, 8, 3, 5])
    assert left_to_right_minima(up_down) == [(1, 6), (3, 2), (5, 1)]
    assert left_to_right_minima(Permutation.from_word([0, 5, 2, 9, 1, 4, 3, 7, 6, 8])) == [(1, 0)]
    assert left_to_right_minima(Permutation.from_word([])) == []


def test_cycle_form_roundtrip():
    p = Permutation.from_word([2, 1, 4, 5, 3])
    cp = to_cycle_form(p)
    assert cp.cycles == ((3, 4, 5), (1, 2))
    assert str(cp) == "(3,4,5)(1,2)"
    assert from_cycle_form(cp) == p


@pytest.mark.parametrize("n", range(1, 7))
def test_reverse_and_cycle_form_on_every_permutation(n):
    labels = tuple(range(1, n + 1))
    for word in itertools.permutations(labels):
        p = Permutation(labels=labels, word=word)
        assert reverse(reverse(p)) == p

        cp = to_cycle_form(p)
        assert from_cycle_form(cp) == p
        assert all(cycle[0] == min(cycle) for cycle in cp.cycles)
        firsts = [cycle[0] for cycle in cp.cycles]
        assert all(a > b for a, b in zip(firsts, firsts[1:]))
        assert sorted(v for cycle in cp.cycles for v in cycle) == list(labels)


def test_cycle_form_keeps_fixed_points():
    cp = to_cycle_form(Permutation.identity([1, 2, 3]))
    assert cp.cycles == ((3,), (2,), (1,))
    assert from_cycle_form(cp, labels=[1, 2, 3]) == Permutation.identity([1, 2, 3])


def test_from_cycle_form_rejects_label_mismatch():
    cp = CyclePermutation.from_cycles([[1, 2]])
    with pytest.raises(CycleFormError):
        from_cycle_form(cp, labels=[1, 2, 3])


def test_from_cycles_canonicalises():
    cp = CyclePermutation.from_cycles([[8, 3, 5, 1], [4, 2], [6, 7]])
    assert cp.cycles == ((6, 7), (2, 4), (1, 8, 3, 5))
    assert str(cp) == "(6,7)(2,4)(1,8,3,5)"
    assert cp.labels == tuple(range(1, 9))


@pytest.mark.parametrize(
    "cycles",
    [
        ((2, 1),),
        ((1, 2), (3, 4)),
        ((3, 4), (1, 3)),
        ((),),
    ],
)
def test_cycle_permutation_rejects_non_canonical(cycles):
    with pytest.raises(CycleFormError):
        CyclePermutation(cycles=cycles)


def test_cycle_predicates():
    cp = CyclePermutation.from_cycles([[1, 8, 3, 5], [2, 4], [6, 7]])
    assert is_cycle_up_down(cp)
    assert all_cycles_even(cp)

    odd = CyclePermutation.from_cycles([[1, 3, 2]])
    assert is_cycle_up_down(odd)
    assert not all_cycles_even(odd)

    assert not is_cycle_up_down(CyclePermutation.from_cycles([[1, 2, 3, 4]]))


def test_peak_set_parse_and_format():
    peaks = PeakSet.parse("4,5,7,8")
    assert peaks.values == (4, 5, 7, 8)
    assert str(peaks) == "{4,5,7,8}"
    assert PeakSet.parse("{4, 5, 7, 8}") == peaks
    assert peaks.max == 8
    assert 5 in peaks and 6 not in peaks
    assert len(peaks) == 4


@pytest.mark.parametrize("text", ["4,4", "5,4", "0,2", "a,2", "-1,2", "4,,5,7,8", "4,5,", ",4"])
def test_peak_set_rejects_malformed(text):
    with pytest.raises(PeakSetError):
        PeakSet.parse(text)
