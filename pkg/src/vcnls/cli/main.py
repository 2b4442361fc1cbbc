# src/vcnls/cli/main.py

import argparse
import logging
import sys
from typing import Optional, Sequence

from ..core.errors import ConfigError
from ..utils.data_structures import EXIT_CONFIG_ERROR
from .commands import COMMAND_HANDLERS
from .config import COMMANDS, dump_config, read_config

logger = logging.getLogger(__name__)

COMMAND_HELP = {
    "lie-check": "verify the commutator table of the symmetry generators",
    "verify-solution": "residual convergence order of an exact solution family",
    "blowup-scan": "growth rates of the L_p and L_inf norms as eps -> 0",
    "distribution-test": "delta-sequence limit tested against bump functions",
    "simulate": "split-step time integration checked against an exact solution",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vcnls",
        description="Verification experiments for the variable-coefficient NLS equation.",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for command in COMMANDS:
        sub = subparsers.add_parser(command, help=COMMAND_HELP[command])
        sub.add_argument("--config", default=None, help="JSON experiment file; defaults apply otherwise")
        sub.add_argument("--out", default=None, help="directory for results.json, results.txt and CSVs")
        sub.add_argument("--plot", action="store_true", help="also write PNG plots into --out")
        sub.add_argument(
            "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging"
        )
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the `vcnls` console script.

    Returns:
        int: 0 when every check passes, 1 on a failed check, 2 on a configuration
             or usage error, 3 on a numerical halt.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG_ERROR if exc.code else 0
    _configure_logging(args.verbose)

    try:
        config = read_config(args.command, args.config)
        logger.debug("Effective configuration:\n%s", dump_config(config))
        bundle = COMMAND_HANDLERS[args.command](config, output_dir=args.out, plot=args.plot)
    except ConfigError as exc:
        print(f"vcnls {args.command}: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    if args.out is not None:
        bundle.write(args.out)
    print(bundle.summary_text())
    return bundle.exit_code


if __name__ == "__main__":
    sys.exit(main())
