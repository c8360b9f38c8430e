"""
AltPeaks CLI Commands
=====================

One module per command; each entry function returns an exit code.
"""
