"""
Command-line entry point.

Exit codes: 0 when every check passes, 1 when a verdict is refuted, 2 on
usage errors and invalid parameters. Results go to standard output as one
document; logging goes to standard error.
"""

import argparse
import logging
import sys

from compspec.commands.checks import add_check_commands
from compspec.commands.graphs import add_graph_commands
from compspec.config import settings

logger = logging.getLogger("compspec")

LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compspec",
        description="Spectra of graph complements: constructions, scans and audits",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)
    add_graph_commands(subparsers)
    add_check_commands(subparsers)
    return parser


def configure_logging(verbose: bool) -> None:
    level = getattr(logging, settings.log_level.upper(), logging.WARNING)
    if verbose:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT, level=level, force=True)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except ValueError as exc:
        # every domain error derives from ValueError
        sys.stderr.write(f"compspec {args.command}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
