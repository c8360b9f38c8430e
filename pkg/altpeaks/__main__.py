"""
AltPeaks CLI Entry Point
========================

Allows running altpeaks as a module: python -m altpeaks
"""

from altpeaks.cli.main import main

if __name__ == "__main__":
    main()
