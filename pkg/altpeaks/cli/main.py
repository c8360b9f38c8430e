"""
AltPeaks CLI Main Module
========================

Command-line entry point. Data goes to stdout, diagnostics to stderr.

Exit codes:
    0  success
    1  verification mismatch (or unexpected failure)
    2  input error (malformed word, peak set, JSON, cap)
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Dict, List, Optional

from altpeaks import __version__
from altpeaks.core.config import get_config
from altpeaks.core.formulas import CapacityError, max_safe_cap
from altpeaks.utils.logger import LogLevel, configure_logging

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2


def parse_range(text: str) -> List[int]:
    """
    Parse a size selection: "9", "4..9" (inclusive) or "4,6,8".

    Raises:
        argparse.ArgumentTypeError: On malformed input
    """
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            values = list(range(int(low), int(high) + 1))
        else:
            values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r} (expected N, A..B or A,B,C)")
    if not values or min(values) < 0:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}")
    return values


def _add_format(parser: argparse.ArgumentParser, choices: List[str], default: str = "text") -> None:
    parser.add_argument(
        "--format",
        choices=choices,
        default=default,
        help="Output format",
    )


def _add_jobs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="Worker processes (default: config workers.jobs)",
    )


def create_parser() -> argparse.ArgumentParser:
    """Create argument parser."""
    parser = argparse.ArgumentParser(
        prog="altpeaks",
        description="Alternating permutations with a given peak set",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  altpeaks euler --max-n 12                  Euler numbers E_0..E_12
  altpeaks count --n 8 --peaks 4,5,7,8        Closed-form count with factors
  altpeaks census --n 9                      Brute-force peak-set census
  altpeaks verify --theorem --n 4..9         Formula vs. census
  altpeaks map 5 3 8 1 4 2 7 6 --ascii       Trace the bijection
  altpeaks matchings --n 4 --closers 3,4     Matchings with a closer set
  altpeaks decode pair.json                  Arc diagram back to a permutation
        """,
    )

    parser.add_argument(
        "-v", "--version",
        action="version",
        version=f"AltPeaks {__version__}",
    )
    parser.add_argument(
        "--verbose",
        action="count",
        default=0,
        help="Log progress to stderr (-vv for debug)",
    )
    parser.add_argument(
        "--log-format",
        choices=["text", "json"],
        default=None,
        help="Log line format (default: config log.format)",
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Euler command
    euler_parser = subparsers.add_parser(
        "euler",
        help="Table of Euler numbers",
    )
    euler_parser.add_argument(
        "--max-n",
        type=int,
        required=True,
        help="Largest n (at most the configured cap)",
    )
    _add_format(euler_parser, ["text", "json"])

    # Count command
    count_parser = subparsers.add_parser(
        "count",
        help="Closed-form count for one peak set",
    )
    count_parser.add_argument("--n", type=int, required=True, help="Permutation length")
    count_parser.add_argument("--peaks", required=True, help="Comma-separated peak set, e.g. 4,5,7,8")
    _add_format(count_parser, ["text", "json"])

    # Census command
    census_parser = subparsers.add_parser(
        "census",
        help="Brute-force peak-set census",
    )
    census_parser.add_argument("--n", type=int, required=True, help="Permutation length")
    census_parser.add_argument(
        "--compare",
        action="store_true",
        help="Add the closed-form count next to each census count",
    )
    _add_format(census_parser, ["text", "json"])
    _add_jobs(census_parser)

    # Verify command
    verify_parser = subparsers.add_parser(
        "verify",
        help="Run verification checks",
    )
    checks = verify_parser.add_argument_group("checks")
    checks.add_argument("--theorem", action="store_true", help="Formula vs. census for each n")
    checks.add_argument("--lemma", action="store_true", help="Matchings by closer set for each k")
    checks.add_argument("--bijections", action="store_true", help="Encode/decode suites for each n")
    checks.add_argument("--cycles", action="store_true", help="Cycle up-down permutations for each k")
    checks.add_argument("--odd-pairs", action="store_true", help="Single-cycle pair factorization for odd n")
    checks.add_argument("--generators", action="store_true", help="Pruned vs. filtered generators for each n")
    verify_parser.add_argument("--n", type=parse_range, default=None, help="Sizes, e.g. 9 or 4..9")
    verify_parser.add_argument("--k", type=parse_range, default=None, help="Half sizes, e.g. 1..6")
    _add_format(verify_parser, ["text", "json"])
    _add_jobs(verify_parser)

    # Map command
    map_parser = subparsers.add_parser(
        "map",
        help="Trace the bijection on an alternating word",
    )
    map_parser.add_argument("word", nargs="+", help="Space-separated alternating word")
    map_parser.add_argument("--ascii", action="store_true", help="Draw the arc diagram")
    _add_format(map_parser, ["text", "json", "dot"])

    # Matchings command
    matchings_parser = subparsers.add_parser(
        "matchings",
        help="Enumerate matchings on [n] with a closer set",
    )
    matchings_parser.add_argument("--n", type=int, required=True, help="Even number of labels")
    matchings_parser.add_argument("--closers", required=True, help="Comma-separated closer set")
    matchings_parser.add_argument(
        "--count-only",
        action="store_true",
        help="Print the formula value and the enumerated count",
    )
    _add_format(matchings_parser, ["text", "json"])

    # Decode command
    decode_parser = subparsers.add_parser(
        "decode",
        help="Decode an arc-diagram pair (JSON) to its permutation",
    )
    decode_parser.add_argument(
        "source",
        nargs="?",
        default="-",
        help="JSON file, or - for stdin",
    )
    _add_format(decode_parser, ["text", "json"])

    return parser


def _apply_settings(parsed: argparse.Namespace) -> None:
    config = get_config()

    jobs = getattr(parsed, "jobs", None)
    if jobs is not None:
        if jobs < 1:
            raise ValueError(f"--jobs must be at least 1, got {jobs}")
        config.set("workers.jobs", jobs)

    if parsed.verbose >= 2:
        level = LogLevel.DEBUG
    elif parsed.verbose == 1:
        level = LogLevel.INFO
    else:
        level = LogLevel.parse(config.get_str("log.level", "WARNING"), default=LogLevel.WARNING)
    configure_logging(level=level, format=parsed.log_format or config.get_str("log.format", "text"))

    cap = config.get_int("limits.max_n", 30)
    safe = max_safe_cap()
    if cap > safe:
        raise CapacityError(
            f"limits.max_n={cap} is too large: E_{cap} does not fit "
            f"{config.get_int('limits.bits', 128)} bits (largest safe cap is {safe})"
        )


def cli(args: Optional[List[str]] = None) -> int:
    """
    Main CLI entry point.

    Args:
        args: Command line arguments (uses sys.argv if None)

    Returns:
        Exit code
    """
    parser = create_parser()
    parsed = parser.parse_args(args)

    if not parsed.command:
        parser.print_help()
        return EXIT_OK

    handlers: Dict[str, Callable[[argparse.Namespace], int]] = {
        "euler": handle_euler,
        "count": handle_count,
        "census": handle_census,
        "verify": handle_verify,
        "map": handle_map,
        "matchings": handle_matchings,
        "decode": handle_decode,
    }

    handler = handlers.get(parsed.command)
    if handler is None:
        parser.print_help()
        return EXIT_INPUT

    try:
        _apply_settings(parsed)
        return handler(parsed)
    except KeyboardInterrupt:
        print("\nAborted.", file=sys.stderr)
        return 130
    except (ValueError, OverflowError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_MISMATCH


def handle_euler(args: argparse.Namespace) -> int:
    """Handle euler command."""
    from altpeaks.cli.commands.euler import show_euler
    return show_euler(args.max_n, args.format)


def handle_count(args: argparse.Namespace) -> int:
    """Handle count command."""
    from altpeaks.cli.commands.count import show_count
    return show_count(args.peaks, args.n, args.format)


def handle_census(args: argparse.Namespace) -> int:
    """Handle census command."""
    from altpeaks.cli.commands.census import show_census
    return show_census(args.n, args.format, args.compare, args.jobs)


def handle_verify(args: argparse.Namespace) -> int:
    """Handle verify command."""
    from altpeaks.cli.commands.verify import run_checks
    selected = [
        name
        for name in ("theorem", "lemma", "bijections", "cycles", "odd_pairs", "generators")
        if getattr(args, name)
    ]
    return run_checks(selected, args.n, args.k, args.format, args.jobs)


def handle_map(args: argparse.Namespace) -> int:
    """Handle map command."""
    from altpeaks.cli.commands.trace import trace_word
    return trace_word(" ".join(args.word), args.format, args.ascii)


def handle_matchings(args: argparse.Namespace) -> int:
    """Handle matchings command."""
    from altpeaks.cli.commands.matchings import list_matchings
    return list_matchings(args.closers, args.n, args.format, args.count_only)


def handle_decode(args: argparse.Namespace) -> int:
    """Handle decode command."""
    from altpeaks.cli.commands.decode import decode_pair
    return decode_pair(args.source, args.format)


def main() -> None:
    """Main entry point."""
    sys.exit(cli())


if __name__ == "__main__":
    main()
