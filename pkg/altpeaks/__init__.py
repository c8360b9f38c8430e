"""
AltPeaks - Alternating Permutations with a Given Peak Set
=========================================================

Exact counting, enumeration and bijective encoding of alternating
permutations (w1 > w2 < w3 > ...) by their set of peak values.

Features:
---------
- Closed-form counts per peak set, for even and odd lengths
- Euler numbers from the boustrophedon triangle
- Cycle up-down permutations and the left-to-right-minima cut
- Arc diagrams: pairs of matchings with a prescribed closer set
- Brute-force oracles that check every formula and bijection
- CLI with JSON, DOT and ASCII output

Quick Start:
    >>> from altpeaks import Permutation, peak_values, peak_count
    >>> p = Permutation.from_word([5, 3, 8, 1, 4, 2, 7, 6])
    >>> peak_values(p)
    PeakSet(values=(4, 5, 7, 8))
    >>> peak_count(peak_values(p), 8).formula_count
    144

    $ altpeaks verify --theorem --n 4..9
"""

from __future__ import annotations

__version__ = "0.1.0"
__license__ = "MIT"

from typing import TYPE_CHECKING, Any

# Core imports (always available)
from altpeaks.core.permcore import (
    CyclePermutation,
    PeakSet,
    Permutation,
    is_alternating,
    is_up_down,
    peak_values,
    reverse,
)
from altpeaks.core.matchings import Matching, MatchingPair
from altpeaks.core.bijections import even_decode, even_encode, odd_decode, odd_encode, tau, tau_inverse
from altpeaks.core.formulas import CountReport, euler_number, peak_count, s_count, t_count
from altpeaks.core.config import Config, get_config

# Lazy imports for faster startup
if TYPE_CHECKING:
    from altpeaks.oracle.census import Census, peak_set_census
    from altpeaks.oracle.harness import VerificationReport
    from altpeaks.utils.logger import Logger


def __getattr__(name: str) -> Any:
    """Lazy loading of the oracle layer and utilities."""
    _imports = {
        "Census": "altpeaks.oracle.census",
        "peak_set_census": "altpeaks.oracle.census",
        "VerificationReport": "altpeaks.oracle.harness",
        "verify_theorem": "altpeaks.oracle.harness",
        "verify_lemma": "altpeaks.oracle.harness",
        "verify_bijections": "altpeaks.oracle.harness",
        "gen_alternating": "altpeaks.oracle.generators",
        "Logger": "altpeaks.utils.logger",
    }

    if name in _imports:
        import importlib
        module = importlib.import_module(_imports[name])
        return getattr(module, name)

    raise AttributeError(f"module 'altpeaks' has no attribute '{name}'")


__all__ = [
    # Metadata
    "__version__",
    "__license__",
    # Core (always loaded)
    "Permutation",
    "CyclePermutation",
    "PeakSet",
    "Matching",
    "MatchingPair",
    "CountReport",
    "Config",
    "get_config",
    "is_alternating",
    "is_up_down",
    "peak_values",
    "reverse",
    "tau",
    "tau_inverse",
    "even_encode",
    "even_decode",
    "odd_encode",
    "odd_decode",
    "euler_number",
    "peak_count",
    "s_count",
    "t_count",
    # Oracle (lazy)
    "Census",
    "peak_set_census",
    "VerificationReport",
    "verify_theorem",
    "verify_lemma",
    "verify_bijections",
    "gen_alternating",
    # Utils (lazy)
    "Logger",
]
