"""
AltPeaks Core Package
=====================

Permutations, matchings, the bijections between them, closed-form
counts and configuration.
"""

from __future__ import annotations

from altpeaks.core.config import Config, get_config, reset_config
from altpeaks.core.permcore import (
    CycleFormError,
    CyclePermutation,
    PeakSet,
    PeakSetError,
    Permutation,
    PermutationError,
)
from altpeaks.core.matchings import Matching, MatchingError, MatchingPair
from altpeaks.core.bijections import BijectionError
from altpeaks.core.formulas import CapacityError, CountReport

__all__ = [
    "Config",
    "get_config",
    "reset_config",
    "Permutation",
    "CyclePermutation",
    "PeakSet",
    "Matching",
    "MatchingPair",
    "CountReport",
    # Errors
    "PermutationError",
    "CycleFormError",
    "PeakSetError",
    "MatchingError",
    "BijectionError",
    "CapacityError",
]
