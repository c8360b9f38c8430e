import pytest

from altpeaks.core.bijections import (
    BijectionError,
    even_decode,
    even_encode,
    from_arc_diagram,
    odd_decode,
    odd_embed,
    odd_encode,
    tau,
    tau_inverse,
    to_arc_diagram,
)
from altpeaks.core.matchings import Matching, MatchingPair, closer_set, union_cycle_count
from altpeaks.core.permcore import CyclePermutation, Permutation, peak_values, reverse
from altpeaks.oracle.generators import gen_alternating, gen_up_down

EVEN_WORD = Permutation.from_word([5, 3, 8, 1, 4, 2, 7, 6])
ODD_WORD = Permutation.from_word([8, 6, 7, 3, 4, 1, 9, 2, 5])


def test_tau_cuts_at_left_to_right_minima():
    cp = tau(reverse(EVEN_WORD))
    assert str(cp) == "(6,7)(2,4)(1,8,3,5)"
    assert tau_inverse(cp) == reverse(EVEN_WORD)


def test_tau_single_cycle_when_word_starts_with_minimum():
    cp = tau(reverse(odd_embed(ODD_WORD)))
    assert cp.cycles == ((0, 5, 2, 9, 1, 4, 3, 7, 6, 8),)


def test_tau_rejects_bad_input():
    with pytest.raises(BijectionError) as info:
        tau(Permutation.from_word([1, 3, 2]))
    assert info.value.invariant == "tau/even-length"

    with pytest.raises(BijectionError) as info:
        tau(Permutation.from_word([2, 1, 3, 4]))
    assert info.value.invariant == "tau/up-down"


def test_tau_inverse_rejects_bad_cycles():
    with pytest.raises(BijectionError):
        tau_inverse(CyclePermutation.from_cycles([[1, 3, 2]]))
    with pytest.raises(BijectionError):
        tau_inverse(CyclePermutation.from_cycles([[1, 2, 3, 4]]))


def test_even_word_arc_diagram():
    pair = even_encode(EVEN_WORD)
    assert str(pair.above) == "{1,8},{2,4},{3,5},{6,7}"
    assert str(pair.below) == "{1,5},{2,4},{3,8},{6,7}"
    assert closer_set(pair.above) == peak_values(EVEN_WORD)
    assert even_decode(pair) == EVEN_WORD


def test_odd_word_arc_diagram():
    pair = odd_encode(ODD_WORD)
    assert pair.labels == tuple(range(0, 10))
    assert str(pair.above) == "{0,5},{1,4},{2,9},{3,7},{6,8}"
    assert str(pair.below) == "{0,8},{1,9},{2,5},{3,4},{6,7}"
    assert closer_set(pair.above) == peak_values(ODD_WORD)
    assert union_cycle_count(pair) == 1
    assert odd_decode(pair) == ODD_WORD


def test_smallest_cases():
    pair = even_encode(Permutation.from_word([2, 1]))
    assert pair.above.arcs == pair.below.arcs == ((1, 2),)
    assert even_decode(pair).word == (2, 1)

    pair = odd_encode(Permutation.from_word([1]))
    assert pair.above.arcs == pair.below.arcs == ((0, 1),)
    assert odd_decode(pair).word == (1,)


def test_odd_embed():
    embedded = odd_embed(Permutation.from_word([3, 1, 2]))
    assert embedded.labels == (0, 1, 2, 3)
    assert embedded.word == (3, 1, 2, 0)


def test_from_arc_diagram_reads_cycles():
    pair = MatchingPair(
        above=Matching.from_arcs([(1, 8), (2, 4), (3, 5), (6, 7)]),
        below=Matching.from_arcs([(1, 5), (2, 4), (3, 8), (6, 7)]),
    )
    assert str(from_arc_diagram(pair)) == "(6,7)(2,4)(1,8,3,5)"


def test_to_arc_diagram_rejects_odd_cycles():
    with pytest.raises(BijectionError):
        to_arc_diagram(CyclePermutation.from_cycles([[1, 3, 2]]))


def test_encoders_reject_wrong_domain():
    with pytest.raises(BijectionError) as info:
        even_encode(Permutation.from_word([1, 2, 4, 3]))
    assert info.value.invariant == "even/alternating"

    with pytest.raises(BijectionError) as info:
        odd_encode(EVEN_WORD)
    assert info.value.invariant == "odd/labels"

    with pytest.raises(BijectionError):
        even_encode(ODD_WORD)


def test_odd_decode_rejects_several_circles():
    same = Matching.from_arcs([(0, 1), (2, 3)])
    with pytest.raises(BijectionError) as info:
        odd_decode(MatchingPair(above=same, below=same))
    assert info.value.invariant == "odd/single-cycle"


def test_decoders_reject_wrong_labels():
    shifted = Matching.from_arcs([(2, 3)])
    with pytest.raises(BijectionError):
        even_decode(MatchingPair(above=shifted, below=shifted))
    with pytest.raises(BijectionError):
        odd_decode(MatchingPair(above=shifted, below=shifted))


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_even_roundtrip_exhaustive(n):
    seen = set()
    for p in gen_alternating(n):
        pair = even_encode(p)
        assert pair.closers == peak_values(p)
        assert even_decode(pair) == p
        seen.add(pair)
    assert len(seen) == sum(1 for _ in gen_alternating(n))


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_odd_roundtrip_exhaustive(n):
    seen = set()
    for p in gen_alternating(n):
        pair = odd_encode(p)
        assert pair.closers == peak_values(p)
        assert union_cycle_count(pair) == 1
        assert odd_decode(pair) == p
        seen.add(pair)
    assert len(seen) == sum(1 for _ in gen_alternating(n))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_tau_roundtrip_on_up_down_words(k):
    for p in gen_up_down(2 * k):
        assert tau_inverse(tau(p)) == p
