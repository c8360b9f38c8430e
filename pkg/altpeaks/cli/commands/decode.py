"""
AltPeaks CLI Decode Command
===========================

Read an arc-diagram pair as JSON and print the alternating
permutation it encodes. Labels {1, ..., 2k} select the even decoder,
labels {0, ..., 2k+1} the odd one.
"""

from __future__ import annotations

import sys
from pathlib import Path

from altpeaks.cli.codec import dumps, loads_pair, permutation_to_dict
from altpeaks.core.bijections import BijectionError, even_decode, odd_decode
from altpeaks.core.permcore import peak_values


def _read_source(source: str) -> bytes:
    if source == "-":
        return sys.stdin.buffer.read() if hasattr(sys.stdin, "buffer") else sys.stdin.read().encode()
    return Path(source).read_bytes()


def decode_pair(source: str = "-", fmt: str = "text") -> int:
    """
    Decode one pair.

    Raises:
        CodecError: If the JSON is not a valid pair
        BijectionError: If the pair is not in the image of either encoder

    Returns:
        Exit code
    """
    pair = loads_pair(_read_source(source))
    labels = pair.labels
    if labels and labels[0] == 0:
        p = odd_decode(pair)
    elif labels and labels[0] == 1:
        p = even_decode(pair)
    else:
        raise BijectionError("labels", f"labels must start at 0 or 1, got {list(labels)}")

    if fmt == "json":
        payload = {"word": permutation_to_dict(p), "peaks": list(peak_values(p).values)}
        sys.stdout.write(dumps(payload).decode() + "\n")
    else:
        print(p)
    return 0
