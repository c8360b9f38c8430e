"""
AltPeaks CLI
============

Command-line interface: argparse dispatcher, JSON codec and text
rendering.
"""

from altpeaks.cli.main import cli, create_parser, main

__all__ = ["cli", "create_parser", "main"]
