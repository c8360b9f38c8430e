import itertools

import pytest

from altpeaks.core.matchings import (
    Matching,
    MatchingError,
    MatchingPair,
    circle_closing_opener,
    closer_set,
    count_all_matchings,
    count_matchings_with_closers,
    count_odd_above,
    count_odd_below,
    double_factorial,
    enumerate_independent_pairs,
    enumerate_matchings_with_closers,
    enumerate_single_cycle_pairs,
    lemma_factors,
    opener_set,
    union_cycle_count,
)
from altpeaks.core.permcore import PeakSet
from altpeaks.oracle.generators import gen_all_matchings

EVEN_WORD = MatchingPair(
    above=Matching.from_arcs([(1, 8), (2, 4), (3, 5), (6, 7)]),
    below=Matching.from_arcs([(1, 5), (2, 4), (3, 8), (6, 7)]),
)
ODD_WORD = MatchingPair(
    above=Matching.from_arcs([(0, 5), (1, 4), (2, 9), (3, 7), (6, 8)]),
    below=Matching.from_arcs([(0, 8), (1, 9), (2, 5), (3, 4), (6, 7)]),
)


def test_from_arcs_normalises():
    m = Matching.from_arcs([(4, 2), (3, 1)])
    assert m.arcs == ((1, 3), (2, 4))
    assert m.labels == (1, 2, 3, 4)
    assert m.partner() == {1: 3, 3: 1, 2: 4, 4: 2}
    assert m.arcs_list() == [[1, 3], [2, 4]]
    assert str(m) == "{1,3},{2,4}"


def test_str_sorts_by_opener():
    assert str(EVEN_WORD.below) == "{1,5},{2,4},{3,8},{6,7}"
    assert EVEN_WORD.below.arcs == ((2, 4), (1, 5), (6, 7), (3, 8))


@pytest.mark.parametrize(
    "labels, arcs",
    [
        ((1, 2, 3), ((1, 2),)),
        ((1, 2, 3, 4), ((1, 2), (2, 4))),
        ((1, 2), ((2, 1),)),
        ((1, 2, 3, 4), ((1, 4), (2, 3))),
        ((1, 2, 3, 4), ((1, 2),)),
    ],
)
def test_matching_rejects_malformed(labels, arcs):
    with pytest.raises(MatchingError):
        Matching(labels=labels, arcs=arcs)


def test_from_arcs_rejects_loop():
    with pytest.raises(MatchingError):
        Matching.from_arcs([(1, 1)])


def test_pair_requires_equal_opener_sets():
    with pytest.raises(MatchingError):
        MatchingPair(
            above=Matching.from_arcs([(1, 2), (3, 4)]),
            below=Matching.from_arcs([(1, 3), (2, 4)]),
        )


def test_closer_and_opener_sets():
    assert closer_set(EVEN_WORD.above) == PeakSet.of([4, 5, 7, 8])
    assert opener_set(EVEN_WORD.above) == (1, 2, 3, 6)
    assert ODD_WORD.closers == PeakSet.of([4, 5, 7, 8, 9])


def test_double_factorial():
    assert [double_factorial(m) for m in (-1, 0, 1, 2, 3, 5, 7)] == [1, 1, 1, 2, 3, 15, 105]
    assert count_all_matchings(0) == 1
    assert count_all_matchings(3) == 15
    with pytest.raises(MatchingError):
        count_all_matchings(-1)


def test_lemma_factors():
    assert lemma_factors(PeakSet.of([4, 5, 7, 8])) == [3, 2, 2]
    assert lemma_factors(PeakSet.of([4, 5, 7, 8, 9]), offset=2) == [4, 3, 3, 2]


@pytest.mark.parametrize(
    "closers, k, expected",
    [
        ((3, 4), 2, 2),
        ((2, 4), 2, 1),
        ((4, 5, 7, 8), 4, 12),
        ((2, 3), 2, 0),
        ((1, 4), 2, 0),
        ((2, 4, 6), 3, 1),
        ((4, 5, 6), 3, 6),
        ((), 0, 1),
    ],
)
def test_count_matchings_with_closers(closers, k, expected):
    assert count_matchings_with_closers(PeakSet.of(closers), k) == expected


def test_count_matchings_with_closers_rejects_bad_shape():
    with pytest.raises(MatchingError):
        count_matchings_with_closers(PeakSet.of([3, 4]), 3)
    with pytest.raises(MatchingError):
        count_matchings_with_closers(PeakSet.of([3, 6]), 2)


def test_enumeration_order_is_deterministic():
    got = [m.arcs for m in enumerate_matchings_with_closers(PeakSet.of([3, 4]), range(1, 5))]
    assert got == [((1, 3), (2, 4)), ((2, 3), (1, 4))]


def test_enumeration_edge_cases():
    assert list(enumerate_matchings_with_closers(PeakSet.of([2, 4]), range(1, 7))) == []
    assert [m.arcs for m in enumerate_matchings_with_closers(PeakSet.of([2, 4]), range(1, 5))] == [
        ((1, 2), (3, 4))
    ]
    with pytest.raises(MatchingError):
        list(enumerate_matchings_with_closers(PeakSet.of([3, 9]), range(1, 5)))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_lemma_matches_brute_force(k):
    labels = list(range(1, 2 * k + 1))
    brute = {}
    for m in gen_all_matchings(labels):
        brute[closer_set(m)] = brute.get(closer_set(m), 0) + 1

    total = 0
    for subset in itertools.combinations(labels, k):
        closers = PeakSet.of(subset)
        streamed = list(enumerate_matchings_with_closers(closers, labels))
        assert len(streamed) == count_matchings_with_closers(closers, k) == brute.get(closers, 0)
        assert all(closer_set(m) == closers for m in streamed)
        total += len(streamed)
    assert total == double_factorial(2 * k - 1)


def test_independent_pairs_are_the_square():
    pairs = list(enumerate_independent_pairs(PeakSet.of([4, 5, 6]), range(1, 7)))
    assert len(pairs) == 36
    assert len(set(pairs)) == 36


def test_union_cycle_count():
    assert union_cycle_count(EVEN_WORD) == 3
    assert union_cycle_count(ODD_WORD) == 1
    same = Matching.from_arcs([(1, 2), (3, 4)])
    assert union_cycle_count(MatchingPair(above=same, below=same)) == 2


def test_circle_closing_opener():
    above = ODD_WORD.above.partner()
    # nothing drawn below yet: the only circle is the doubled arc {1,4}
    assert circle_closing_opener(4, above, {}) == 1
    # with {3,4} drawn: 5 -> 0, which has no below arc yet
    assert circle_closing_opener(5, above, {3: 4, 4: 3}) == 0
    # with {3,4},{2,5} drawn: 7 -> 3 -> 4 -> 1
    assert circle_closing_opener(7, above, {3: 4, 4: 3, 2: 5, 5: 2}) == 1


def test_single_cycle_pairs_small():
    pairs = list(enumerate_single_cycle_pairs(PeakSet.of([2, 3]), range(0, 4)))
    assert len(pairs) == 2
    assert all(union_cycle_count(p) == 1 for p in pairs)
    assert count_odd_above(PeakSet.of([2, 3])) == 2
    assert count_odd_below(PeakSet.of([2, 3])) == 1


def test_single_cycle_pairs_contain_odd_word():
    pairs = set(enumerate_single_cycle_pairs(ODD_WORD.closers, range(0, 10)))
    assert ODD_WORD in pairs
    assert len(pairs) == count_odd_above(ODD_WORD.closers) * count_odd_below(ODD_WORD.closers)
    assert len(pairs) == 72 * 12


def test_single_cycle_pairs_need_zero_label():
    with pytest.raises(MatchingError):
        list(enumerate_single_cycle_pairs(PeakSet.of([2, 3]), range(1, 5)))


def test_odd_counts_need_odd_maximum():
    with pytest.raises(MatchingError):
        count_odd_above(PeakSet.of([2, 4]))
    with pytest.raises(MatchingError):
        count_odd_below(PeakSet.of([3, 4]))
