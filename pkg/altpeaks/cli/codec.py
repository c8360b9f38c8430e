"""
AltPeaks JSON Codec
===================

Canonical JSON for the values the CLI exports:

    permutation  {"labels": [...], "word": [...]}
    matching     {"labels": [...], "arcs": [[o, c], ...]}    arcs sorted by closer
    pair         {"above": <matching>, "below": <matching>}
    census       {"n": ..., "entries": [{"peaks": [...], "count": ...}]}

Encoding is deterministic (fixed key order, no whitespace), so parsing an
exported value and exporting it again gives identical bytes.
"""

from __future__ import annotations

from typing import Any, Dict, List, Union

import orjson

from altpeaks.core.formulas import CountReport
from altpeaks.core.matchings import Matching, MatchingError, MatchingPair
from altpeaks.core.permcore import CyclePermutation, Permutation, PermutationError
from altpeaks.oracle.census import Census
from altpeaks.oracle.harness import VerificationReport


class CodecError(ValueError):
    """Input JSON does not describe a valid value."""
    pass


def permutation_to_dict(p: Permutation) -> Dict[str, Any]:
    return {"labels": list(p.labels), "word": list(p.word)}


def cycles_to_list(cp: CyclePermutation) -> List[List[int]]:
    return [list(cycle) for cycle in cp.cycles]


def matching_to_dict(m: Matching) -> Dict[str, Any]:
    return {"labels": list(m.labels), "arcs": m.arcs_list()}


def pair_to_dict(pair: MatchingPair) -> Dict[str, Any]:
    return {"above": matching_to_dict(pair.above), "below": matching_to_dict(pair.below)}


def census_to_dict(census: Census) -> Dict[str, Any]:
    return {
        "n": census.n,
        "entries": [
            {"peaks": list(peaks.values), "count": count}
            for peaks, count in census.entries.items()
        ],
    }


def count_report_to_dict(report: CountReport) -> Dict[str, Any]:
    return {
        "peaks": list(report.peak_set.values),
        "count": report.formula_count,
        "factors": list(report.factors),
    }


def report_to_dict(report: VerificationReport) -> Dict[str, Any]:
    return report.to_dict()


def dumps(value: Any) -> bytes:
    """Serialise to canonical JSON bytes (no trailing newline)."""
    return orjson.dumps(value, default=str)


def _load(data: Union[str, bytes]) -> Any:
    try:
        return orjson.loads(data)
    except orjson.JSONDecodeError as e:
        raise CodecError(f"invalid JSON: {e}") from e


def _int_list(obj: Any, name: str) -> List[int]:
    if not isinstance(obj, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in obj):
        raise CodecError(f"'{name}' must be a list of integers")
    return obj


def permutation_from_dict(obj: Any) -> Permutation:
    if not isinstance(obj, dict) or set(obj) != {"labels", "word"}:
        raise CodecError("a permutation needs exactly the keys 'labels' and 'word'")
    try:
        return Permutation(
            labels=tuple(_int_list(obj["labels"], "labels")),
            word=tuple(_int_list(obj["word"], "word")),
        )
    except PermutationError as e:
        raise CodecError(str(e)) from e


def matching_from_dict(obj: Any) -> Matching:
    if not isinstance(obj, dict) or set(obj) != {"labels", "arcs"}:
        raise CodecError("a matching needs exactly the keys 'labels' and 'arcs'")
    arcs = obj["arcs"]
    if not isinstance(arcs, list) or any(len(_int_list(arc, "arcs")) != 2 for arc in arcs):
        raise CodecError("'arcs' must be a list of [opener, closer] pairs")
    try:
        return Matching(
            labels=tuple(_int_list(obj["labels"], "labels")),
            arcs=tuple((arc[0], arc[1]) for arc in arcs),
        )
    except MatchingError as e:
        raise CodecError(str(e)) from e


def pair_from_dict(obj: Any) -> MatchingPair:
    if not isinstance(obj, dict) or set(obj) != {"above", "below"}:
        raise CodecError("a pair needs exactly the keys 'above' and 'below'")
    try:
        return MatchingPair(
            above=matching_from_dict(obj["above"]),
            below=matching_from_dict(obj["below"]),
        )
    except MatchingError as e:
        raise CodecError(str(e)) from e


def loads_permutation(data: Union[str, bytes]) -> Permutation:
    return permutation_from_dict(_load(data))


def loads_matching(data: Union[str, bytes]) -> Matching:
    return matching_from_dict(_load(data))


def loads_pair(data: Union[str, bytes]) -> MatchingPair:
    return pair_from_dict(_load(data))
