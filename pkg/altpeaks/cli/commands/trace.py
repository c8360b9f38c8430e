"""
AltPeaks CLI Map Command
========================

Trace the bijection from an alternating word to its arc diagram,
stage by stage:

    word -> (trailing 0 for odd n) -> reverse -> left-to-right minima
         -> tau cycles -> above / below arcs -> closer set

Example:
    $ altpeaks map 5 3 8 1 4 2 7 6
    word          5 3 8 1 4 2 7 6
    peak set      {4,5,7,8}
    reverse       6 7 2 4 1 8 3 5
    ...
"""

from __future__ import annotations

import sys
from typing import Any, Dict, List, Tuple

from altpeaks.cli.codec import cycles_to_list, dumps, pair_to_dict, permutation_to_dict
from altpeaks.cli.render import ascii_arc_diagram, dot_arc_diagram
from altpeaks.core.bijections import even_decode, odd_decode, odd_embed, tau, to_arc_diagram
from altpeaks.core.matchings import MatchingPair, closer_set
from altpeaks.core.permcore import (
    Permutation,
    PermutationError,
    is_alternating,
    left_to_right_minima,
    peak_values,
    reverse,
)


def parse_word(text: str) -> Permutation:
    """
    Parse a space-separated alternating word of [n].

    Raises:
        PermutationError: If the input is not an alternating permutation of [n]
    """
    try:
        values = [int(token) for token in text.split()]
    except ValueError as e:
        raise PermutationError(f"words are space-separated integers, got {text!r}") from e
    if not values:
        raise PermutationError("empty word")
    if sorted(values) != list(range(1, len(values) + 1)):
        raise PermutationError(f"{text!r} is not a permutation of [{len(values)}]")
    p = Permutation.from_word(values)
    if not is_alternating(p):
        raise PermutationError(f"{p} is not alternating (expected w1 > w2 < w3 > ...)")
    return p


def build_trace(p: Permutation) -> Tuple[List[Tuple[str, str]], Dict[str, Any], MatchingPair]:
    """
    Run every stage on `p`.

    Returns:
        (labelled text lines, JSON payload, arc diagram)
    """
    odd = len(p) % 2 == 1
    source = odd_embed(p) if odd else p
    reversed_word = reverse(source)
    minima = [value for _, value in left_to_right_minima(reversed_word)]
    cycles = tau(reversed_word)
    pair = to_arc_diagram(cycles)
    decoded = odd_decode(pair) if odd else even_decode(pair)

    peaks = peak_values(p)
    closers = closer_set(pair.above)

    lines = [("word", str(p)), ("peak set", str(peaks))]
    if odd:
        lines.append(("embedded", str(source)))
    lines += [
        ("reverse", str(reversed_word)),
        ("lr minima", " ".join(str(v) for v in minima)),
        ("cycles", str(cycles)),
        ("above arcs", str(pair.above)),
        ("below arcs", str(pair.below)),
        ("closer set", str(closers)),
        ("decoded", str(decoded)),
    ]

    payload = {
        "word": permutation_to_dict(p),
        "peaks": list(peaks.values),
        "reverse": permutation_to_dict(reversed_word),
        "lr_minima": minima,
        "cycles": cycles_to_list(cycles),
        "pair": pair_to_dict(pair),
        "closers": list(closers.values),
    }
    return lines, payload, pair


def trace_word(text: str, fmt: str = "text", ascii_diagram: bool = False) -> int:
    """
    Print the trace of one word.

    Returns:
        Exit code
    """
    p = parse_word(text)
    lines, payload, pair = build_trace(p)

    if fmt == "json":
        sys.stdout.write(dumps(payload).decode() + "\n")
        return 0
    if fmt == "dot":
        print(dot_arc_diagram(pair))
        return 0

    width = max(len(name) for name, _ in lines) + 2
    for name, value in lines:
        print(f"{name:<{width}}{value}")
    if ascii_diagram:
        print()
        print(ascii_arc_diagram(pair))
    return 0
