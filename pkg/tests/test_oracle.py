import io

import orjson
import pytest

from altpeaks.core.formulas import candidate_peak_sets, peak_count
from altpeaks.core.matchings import closer_set
from altpeaks.core.permcore import PeakSet, is_alternating, is_up_down
from altpeaks.oracle.census import Census, census_shard, merge_counts, peak_set_census
from altpeaks.oracle.generators import (
    alternating_words,
    filter_alternating,
    filter_cycle_updown_even,
    gen_all_matchings,
    gen_alternating,
    gen_cycle_updown_even,
    gen_up_down,
)
from altpeaks.oracle.harness import (
    Mismatch,
    VerificationReport,
    verify_bijections,
    verify_cycle_updown,
    verify_generators,
    verify_lemma,
    verify_odd_pairs,
    verify_theorem,
)
from altpeaks.oracle.workers import ShardPool
from altpeaks.utils.logger import configure_logging

EULER = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765]


def _square(x):
    return x * x


# Generators

@pytest.mark.parametrize("n", range(0, 10))
def test_gen_alternating_counts(n):
    words = [p.word for p in gen_alternating(n)]
    assert len(words) == EULER[n]
    assert words == sorted(words)
    assert len(set(words)) == len(words)


@pytest.mark.parametrize("n", range(1, 8))
def test_gen_alternating_matches_definition_filter(n):
    assert list(gen_alternating(n)) == filter_alternating(n)


def test_gen_alternating_small_lists():
    assert [p.word for p in gen_alternating(4)] == [
        (2, 1, 4, 3),
        (3, 1, 4, 2),
        (3, 2, 4, 1),
        (4, 1, 3, 2),
        (4, 2, 3, 1),
    ]


def test_alternating_words_shards():
    assert list(alternating_words(4, first=1)) == []
    assert list(alternating_words(4, first=9)) == []
    assert sum(len(list(alternating_words(6, first))) for first in range(1, 7)) == EULER[6]


def test_gen_up_down():
    words = list(gen_up_down(5))
    assert len(words) == EULER[5]
    assert all(is_up_down(p) for p in words)
    assert not any(is_alternating(p) for p in words)


@pytest.mark.parametrize("k", range(0, 5))
def test_gen_cycle_updown_even_counts(k):
    assert sum(1 for _ in gen_cycle_updown_even(k)) == EULER[2 * k]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_gen_cycle_updown_even_matches_definition_filter(k):
    generated = list(gen_cycle_updown_even(k))
    assert len(set(generated)) == len(generated)
    assert set(generated) == set(filter_cycle_updown_even(k))


def test_gen_all_matchings():
    matchings = list(gen_all_matchings(range(1, 7)))
    assert len(matchings) == 15
    assert len(set(matchings)) == 15
    assert [m.arcs for m in gen_all_matchings([1, 2, 3, 4])] == [
        ((1, 2), (3, 4)),
        ((1, 3), (2, 4)),
        ((2, 3), (1, 4)),
    ]
    assert closer_set(next(iter(gen_all_matchings([])))) == PeakSet.of([])


# Census

def test_census_n4():
    census = peak_set_census(4)
    assert census.entries == {PeakSet.of([2, 4]): 1, PeakSet.of([3, 4]): 4}
    assert census.total == 5
    assert census.count(PeakSet.of([2, 3])) == 0


def test_census_shard_and_merge():
    partials = [census_shard(5, first) for first in range(1, 6)]
    merged = merge_counts(partials)
    assert list(merged) == sorted(merged)
    assert sum(merged.values()) == EULER[5]
    assert merge_counts(list(reversed(partials))) == merged


def test_census_is_independent_of_worker_count():
    assert peak_set_census(7, jobs=1) == peak_set_census(7, jobs=3)


def test_census_rejects_empty_size():
    with pytest.raises(ValueError):
        peak_set_census(0)


@pytest.mark.parametrize("n", range(1, 11))
def test_census_matches_formula(n):
    census = peak_set_census(n)
    for peaks in candidate_peak_sets(n):
        assert census.count(peaks) == peak_count(peaks, n).formula_count
    assert census.total == EULER[n]


# Worker pool

def test_shard_pool_in_process():
    pool = ShardPool(jobs=1)
    assert pool.map(_square, [(1,), (2,), (3,)]) == [1, 4, 9]
    stats = pool.stats()
    assert (stats.shards, stats.completed, stats.jobs) == (3, 3, 1)


def test_shard_pool_processes_keep_order():
    pool = ShardPool(jobs=2)
    assert pool.map(_square, [(v,) for v in range(6)]) == [0, 1, 4, 9, 16, 25]
    assert pool.stats().jobs == 2


def test_shard_pool_defaults_to_config(isolated_config):
    isolated_config.set("workers.jobs", 4)
    assert ShardPool().jobs == 4
    assert ShardPool(jobs=0).jobs == 1


# Reports

def test_report_records_mismatches():
    report = VerificationReport(check="demo", size=3)
    assert report.expect("a", 1, 1)
    assert not report.expect("b", 1, 2, "note")
    assert report.checked == 2
    assert not report.ok
    assert not report
    assert report.mismatches == [Mismatch("b", 1, 2, "note")]
    assert report.to_dict()["mismatches"] == [
        {"subject": "b", "expected": 1, "actual": 2, "note": "note"}
    ]


def test_report_merge():
    left = VerificationReport(check="demo", size=3, checked=2, summary={"total": 5, "euler": 5})
    right = VerificationReport(check="demo", size=3, checked=1, summary={"total": 2})
    merged = left.merge(right)
    assert merged.checked == 3
    assert merged.summary == {"total": 7, "euler": 5}
    assert merged.ok


def test_report_merge_is_associative():
    a = VerificationReport(check="demo", size=3, checked=1, summary={"total": 1})
    b = VerificationReport(check="demo", size=3)
    b.expect("x", 1, 2, "note")
    c = VerificationReport(check="demo", size=3, checked=4, summary={"total": 3})
    left = a.merge(b).merge(c)
    right = a.merge(b.merge(c))
    assert left.to_dict() == right.to_dict()
    assert left.checked == 6
    assert left.mismatches == [Mismatch("x", 1, 2, "note")]


def test_verify_bijections_same_for_any_jobs():
    serial = verify_bijections(7, jobs=1)
    parallel = verify_bijections(7, jobs=3)
    assert serial.to_dict() == parallel.to_dict()
    assert serial.summary["roundtrips"] == EULER[7]


# Harness

@pytest.mark.parametrize("n", range(1, 8))
def test_verify_generators(n):
    assert verify_generators(n).ok


@pytest.mark.parametrize("n", range(1, 11))
def test_verify_theorem(n):
    report = verify_theorem(n)
    assert report.ok, report.mismatches
    assert report.summary["total"] == report.summary["euler"] == EULER[n]


def test_verify_theorem_counts_zero_sets():
    report = verify_theorem(5)
    # {2,3,5} is the only infeasible candidate for n = 5
    assert report.summary["candidates"] == 3
    assert report.summary["zero_sets"] == 1


@pytest.mark.slow
@pytest.mark.parametrize("n", [11, 12])
def test_verify_theorem_largest(n):
    report = verify_theorem(n, jobs=2)
    assert report.ok, report.mismatches[:5]
    assert report.summary["total"] == EULER[n]


@pytest.mark.parametrize("k", range(1, 7))
def test_verify_lemma(k):
    report = verify_lemma(k)
    assert report.ok, report.mismatches
    assert report.summary["total"] == report.summary["double_factorial"]


@pytest.mark.parametrize("n", range(1, 10))
def test_verify_bijections(n):
    report = verify_bijections(n)
    assert report.ok, report.mismatches[:5]
    assert report.summary["roundtrips"] == EULER[n]


@pytest.mark.slow
def test_verify_bijections_n10():
    report = verify_bijections(10, jobs=2)
    assert report.ok, report.mismatches[:5]
    assert report.summary["roundtrips"] == EULER[10]


@pytest.mark.parametrize("k", range(1, 5))
def test_verify_cycle_updown(k):
    report = verify_cycle_updown(k)
    assert report.ok, report.mismatches[:5]
    assert report.summary["cycle_updown"] == EULER[2 * k]


@pytest.mark.slow
def test_verify_cycle_updown_k5():
    assert verify_cycle_updown(5).ok


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_verify_odd_pairs(n):
    report = verify_odd_pairs(n)
    assert report.ok, report.mismatches[:5]
    assert report.summary["single_cycle_pairs"] == EULER[n]


@pytest.mark.slow
def test_verify_odd_pairs_n9():
    report = verify_odd_pairs(9)
    assert report.ok, report.mismatches[:5]
    assert report.summary["single_cycle_pairs"] == EULER[9]


def test_verify_odd_pairs_rejects_even_n():
    with pytest.raises(ValueError):
        verify_odd_pairs(4)


def test_census_shard_logs_progress_with_context():
    stream = io.StringIO()
    configure_logging(level="DEBUG", format="json", stream=stream)
    counts = census_shard(4, 2)
    record = orjson.loads(stream.getvalue().splitlines()[-1])
    assert record["message"] == "shard finished"
    assert record["context"] == {"n": 4, "first": 2, "words": sum(counts.values())}
