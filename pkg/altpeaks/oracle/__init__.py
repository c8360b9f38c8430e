"""
AltPeaks Oracle Package
=======================

Brute-force generators, the sharded peak-set census and the
verification harness.
"""
