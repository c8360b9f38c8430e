"""
AltPeaks Verification Harness
=============================

Cross-checks every formula, count and bijection against exhaustive
enumeration. Each check returns a VerificationReport: a structured
list of mismatches plus a summary, never printed text, so callers
decide how to present it. Mismatches are report content, not faults.

Checks:
- verify_generators: pruned generators vs. factorial definition filters
- verify_theorem: peak-set census vs. s_count / t_count, total vs. E_n
- verify_lemma: matchings with a closer set, formula vs. stream vs. brute force
- verify_bijections: encode/decode roundtrips, injectivity, surjectivity
- verify_cycle_updown: cycle up-down count vs. E_2k, tau roundtrip
- verify_odd_pairs: constructive single-cycle pairs vs. filtered pairs
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Set, Tuple

from altpeaks.core.bijections import (
    BijectionError,
    even_decode,
    even_encode,
    odd_decode,
    odd_encode,
    tau,
    tau_inverse,
)
from altpeaks.core.formulas import candidate_peak_sets, euler_number, peak_count
from altpeaks.core.matchings import (
    MatchingPair,
    closer_set,
    count_matchings_with_closers,
    count_odd_above,
    count_odd_below,
    double_factorial,
    enumerate_independent_pairs,
    enumerate_matchings_with_closers,
    enumerate_single_cycle_pairs,
    union_cycle_count,
)
from altpeaks.core.permcore import (
    CyclePermutation,
    PeakSet,
    all_cycles_even,
    is_cycle_up_down,
    peak_values,
)
from altpeaks.oracle.census import peak_set_census
from altpeaks.oracle.generators import (
    filter_alternating,
    filter_cycle_updown_even,
    gen_all_matchings,
    gen_alternating,
    gen_cycle_updown_even,
    gen_up_down,
)
from altpeaks.oracle.workers import ShardPool
from altpeaks.utils.logger import get_logger

logger = get_logger("altpeaks.harness")


@dataclass(frozen=True)
class Mismatch:
    """
    One discrepancy found by a check.

    Attributes:
        subject: What was checked (a peak set, a word, ...)
        expected: Value from the formula or the reference side
        actual: Value from the exhaustive side
        note: Short name of the violated property
    """

    subject: str
    expected: Any
    actual: Any
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "expected": self.expected,
            "actual": self.actual,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    """
    Outcome of one verification run.

    Attributes:
        check: Name of the check ("theorem", "lemma", ...)
        size: The n or k the check ran at
        checked: Number of individual comparisons made
        mismatches: Every discrepancy found
        summary: Headline numbers (totals, Euler numbers, ...)
    """

    check: str
    size: int
    checked: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __bool__(self) -> bool:
        return self.ok

    def expect(self, subject: str, expected: Any, actual: Any, note: str = "") -> bool:
        """Record one comparison; returns True if it matched."""
        self.checked += 1
        if expected != actual:
            self.mismatches.append(Mismatch(subject, expected, actual, note))
            return False
        return True

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine two partial reports of the same check."""
        summary = dict(self.summary)
        for key, value in other.summary.items():
            if isinstance(value, int) and isinstance(summary.get(key), int):
                summary[key] += value
            else:
                summary.setdefault(key, value)
        return VerificationReport(
            check=self.check,
            size=self.size,
            checked=self.checked + other.checked,
            mismatches=self.mismatches + other.mismatches,
            summary=summary,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "size": self.size,
            "ok": self.ok,
            "checked": self.checked,
            "mismatches": [m.to_dict() for m in self.mismatches],
            "summary": self.summary,
        }


def _finish(report: VerificationReport) -> VerificationReport:
    if report.ok:
        logger.info("check passed", check=report.check, size=report.size, checked=report.checked)
    else:
        logger.warning(
            "check failed",
            check=report.check,
            size=report.size,
            mismatches=len(report.mismatches),
        )
    return report


def verify_generators(n: int) -> VerificationReport:
    """
    Pruned alternating generator vs. the n! definition filter.

    Args:
        n: Kept small (n <= 7 in practice)
    """
    report = VerificationReport(check="generators", size=n)
    pruned = [p.word for p in gen_alternating(n)]
    filtered = [p.word for p in filter_alternating(n)]
    report.expect(f"E_{n} words", filtered, pruned, "pruned-generator")
    report.summary["alternating"] = len(pruned)
    return _finish(report)


def verify_theorem(n: int, jobs: Optional[int] = None) -> VerificationReport:
    """
    Compare the peak-set census of [n] with the closed-form counts.

    Every candidate peak set is compared, including sets whose formula
    count is 0, and the census total is compared with E_n.
    """
    report = VerificationReport(check="theorem", size=n)
    census = peak_set_census(n, jobs=jobs)
    candidates = list(candidate_peak_sets(n))
    zero_sets = 0

    for peaks in candidates:
        formula = peak_count(peaks, n).formula_count
        if formula == 0:
            zero_sets += 1
        report.expect(str(peaks), formula, census.count(peaks), "formula-vs-census")

    known = set(candidates)
    for peaks, count in census.entries.items():
        if peaks not in known:
            report.expect(str(peaks), 0, count, "peak-set-shape")

    euler = euler_number(n)
    report.expect(f"E_{n}", euler, census.total, "census-total")
    report.summary.update(
        candidates=len(candidates),
        zero_sets=zero_sets,
        total=census.total,
        euler=euler,
    )
    return _finish(report)


def verify_lemma(k: int) -> VerificationReport:
    """
    Matchings on [2k] by closer set: formula, constructive stream and
    brute-force enumeration must agree for every k-subset of [2k].
    """
    report = VerificationReport(check="lemma", size=k)
    labels = list(range(1, 2 * k + 1))

    brute: Counter[PeakSet] = Counter(closer_set(m) for m in gen_all_matchings(labels))
    total = 0
    for subset in itertools.combinations(labels, k):
        closers = PeakSet.of(subset)
        formula = count_matchings_with_closers(closers, k)
        streamed = sum(1 for _ in enumerate_matchings_with_closers(closers, labels))
        report.expect(str(closers), formula, streamed, "formula-vs-stream")
        report.expect(str(closers), formula, brute[closers], "formula-vs-brute-force")
        total += streamed

    expected_total = double_factorial(2 * k - 1)
    report.expect(f"(2*{k}-1)!!", expected_total, total, "matching-total")
    report.summary.update(total=total, double_factorial=expected_total)
    return _finish(report)


def _bijection_shard(
    n: int,
    first: int,
) -> Tuple[VerificationReport, Dict[PeakSet, List[MatchingPair]]]:
    report = VerificationReport(check="bijections", size=n)
    images: Dict[PeakSet, List[MatchingPair]] = defaultdict(list)
    roundtrips = 0
    odd = n % 2 == 1

    for p in gen_alternating(n, first):
        peaks = peak_values(p)
        try:
            pair = odd_encode(p) if odd else even_encode(p)
            back = odd_decode(pair) if odd else even_decode(pair)
        except BijectionError as e:
            report.expect(str(p), "encodable", e.invariant, "bijection-domain")
            continue

        report.expect(str(p), str(peaks), str(closer_set(pair.above)), "closer-set")
        if odd:
            report.expect(str(p), 1, union_cycle_count(pair), "single-cycle")
        if report.expect(str(p), str(p), str(back), "roundtrip"):
            roundtrips += 1
        images[peaks].append(pair)

    report.summary["roundtrips"] = roundtrips
    return report, dict(images)


def verify_bijections(n: int, jobs: Optional[int] = None) -> VerificationReport:
    """
    Encode every alternating permutation of [n] and decode it back.

    Checks closer set = peak set, decode(encode(p)) = p, that no two
    permutations share an encoding, and that the image for each closer
    set is exactly the set of pairs enumerated for it (independent
    pairs for even n, single-cycle pairs for odd n).
    """
    pool = ShardPool(jobs)
    partials = pool.map(_bijection_shard, [(n, first) for first in range(1, n + 1)])

    report = functools.reduce(
        VerificationReport.merge,
        (shard_report for shard_report, _ in partials),
        VerificationReport(check="bijections", size=n, summary={"roundtrips": 0}),
    )
    images: Dict[PeakSet, List[MatchingPair]] = defaultdict(list)
    for _, shard_images in partials:
        for peaks, pairs in shard_images.items():
            images[peaks].extend(pairs)

    encoded = sum(len(pairs) for pairs in images.values())
    distinct = len({pair for pairs in images.values() for pair in pairs})
    report.expect("encodings", encoded, distinct, "injective")

    odd = n % 2 == 1
    labels = range(0, n + 1) if odd else range(1, n + 1)
    for peaks in candidate_peak_sets(n):
        image: Set[MatchingPair] = set(images.get(peaks, []))
        if odd:
            expected = set(enumerate_single_cycle_pairs(peaks, labels))
        else:
            expected = set(enumerate_independent_pairs(peaks, labels))
        report.expect(str(peaks), peak_count(peaks, n).formula_count, len(image), "image-size")
        report.expect(str(peaks), len(expected), len(image), "surjective")
        if image != expected:
            report.expect(str(peaks), "image = enumerated pairs", "sets differ", "surjective")

    report.summary.update(encoded=encoded, peak_sets=len(images))
    return _finish(report)


def verify_cycle_updown(k: int, meta_max_k: int = 3) -> VerificationReport:
    """
    Cycle up-down permutations of [2k] with even cycles number E_2k,
    and tau is a bijection onto them from the up-down words of [2k].

    For k <= meta_max_k the cycle generator is also compared with the
    (2k)! definition filter.
    """
    report = VerificationReport(check="cycle-updown", size=k)
    generated = list(gen_cycle_updown_even(k))
    euler = euler_number(2 * k)
    report.expect(f"E_{2 * k}", euler, len(generated), "cycle-updown-count")

    if k <= meta_max_k:
        report.expect("definition filter", set(filter_cycle_updown_even(k)), set(generated), "cycle-generator")

    image: Set[CyclePermutation] = set()
    for p in gen_up_down(2 * k):
        cp = tau(p)
        image.add(cp)
        if not (is_cycle_up_down(cp) and all_cycles_even(cp)):
            report.expect(str(p), "cycle up-down with even cycles", str(cp), "tau-image")
        report.expect(str(p), p, tau_inverse(cp), "tau-roundtrip")

    report.expect("tau image", set(generated), image, "tau-onto")
    report.summary.update(cycle_updown=len(generated), euler=euler)
    return _finish(report)


def verify_odd_pairs(n: int) -> VerificationReport:
    """
    For every candidate closer set on {0, ..., n} (n odd), the
    constructive single-cycle stream equals the single-cycle filter of
    all independent pairs, and its size is
    count_odd_above * count_odd_below = t_count.
    """
    if n % 2 == 0:
        raise ValueError(f"odd-pair verification needs odd n, got {n}")

    report = VerificationReport(check="odd-pairs", size=n)
    labels = list(range(0, n + 1))
    total = 0

    for closers in candidate_peak_sets(n):
        constructed = list(enumerate_single_cycle_pairs(closers, labels))
        filtered = {
            pair
            for pair in enumerate_independent_pairs(closers, labels)
            if union_cycle_count(pair) == 1
        }
        product = count_odd_above(closers) * count_odd_below(closers)
        report.expect(str(closers), len(constructed), len(set(constructed)), "no-duplicates")
        report.expect(str(closers), len(filtered), len(constructed), "constructive-vs-filter")
        if set(constructed) != filtered:
            report.expect(str(closers), "equal pair sets", "sets differ", "constructive-vs-filter")
        report.expect(str(closers), product, len(constructed), "factorization")
        report.expect(str(closers), peak_count(closers, n).formula_count, product, "t-count")
        total += len(constructed)

    report.summary.update(single_cycle_pairs=total)
    return _finish(report)
