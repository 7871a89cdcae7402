"""ChoquetKit command line application

Parses the invocation, configures logging and history, and routes the
verb to its Command. The exit status is the contract: 0 success,
1 mathematical negative, 2 usage / parse / budget, 3 internal
cross-check failure.
"""

import argparse
import logging
import sys
from typing import List, Optional

from cli.commands import COMMANDS
from utils import config
from utils.config import validate_config
from utils.error_handler import EXIT_OK, EXIT_USAGE, global_error_handler, safe_execute
from utils.sqlite_logger import SQLiteLogger

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

logger = logging.getLogger(__name__)


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """Flags accepted both before and after the verb"""
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument("--quiet", "-q", action="store_true", default=default(False),
                        help="print nothing to stdout; rely on the exit status")
    parser.add_argument("--format", choices=("text", "machine"), default=default("text"),
                        help="output format (default: text)")
    parser.add_argument("--log-level", choices=LOG_LEVELS, default=default(None),
                        help="logging level on stderr (default: CHOQUET_KIT_LOG_LEVEL)")
    parser.add_argument("--history", metavar="PATH", default=default(None),
                        help="record scans and invocations in this SQLite file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="choquet-kit",
        description="Exact Choquet integrals and the submodular / subadditive equivalence",
    )
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    verbs = parser.add_subparsers(dest="verb", metavar="VERB")
    verbs.required = True

    check = verbs.add_parser("check", parents=[common], help="decide submodularity of a capacity")
    check.add_argument("capacity_file")

    integrate = verbs.add_parser("integrate", parents=[common], help="Choquet integral of a function")
    integrate.add_argument("capacity_file")
    integrate.add_argument("function_file")
    integrate.add_argument("--method", choices=("both", "layer", "sorted"), default="both",
                           help="evaluator; 'both' cross-checks layer-cake against sorted levels")

    prove = verbs.add_parser("prove", parents=[common], help="certificate for int(X+Y) <= int X + int Y")
    prove.add_argument("capacity_file")
    prove.add_argument("x_file")
    prove.add_argument("y_file")

    scan = verbs.add_parser("scan", parents=[common], help="randomized check of both directions")
    scan.add_argument("--n", type=int, required=True, help="ground-set size")
    scan.add_argument("--count", type=int, default=100, help="capacities to test (default: 100)")
    scan.add_argument("--max-value", type=int, default=3, help="function values range over 0..max (default: 3)")
    scan.add_argument("--seed", type=int, default=0)
    scan.add_argument("--workers", type=int, default=None,
                      help="thread-pool size (default: CHOQUET_KIT_SCAN_WORKERS); results do not depend "
                           "on it, and exact arithmetic holds the GIL, so extra threads rarely speed a scan up")
    scan.add_argument("--sample", action="store_true",
                      help="sample function pairs instead of failing when over budget")
    scan.add_argument("--csv", metavar="PATH", default=None, help="write per-capacity records as CSV")

    lemma = verbs.add_parser("lemma", parents=[common], help="render and check the lattice-set identities")
    lemma.add_argument("--k", type=int, required=True)
    lemma.add_argument("--bound", type=int, default=None, help="window size (default: 2k+3)")

    generate = verbs.add_parser("generate", parents=[common], help="seeded random capacity")
    generate.add_argument("--n", type=int, required=True)
    generate.add_argument("--kind", choices=("monotone", "submodular"), default="submodular")
    generate.add_argument("--seed", type=int, default=0)
    generate.add_argument("--out", metavar="PATH", default=None, help="output file (default: stdout)")

    return parser


class ChoquetKitApp:
    """Main application class for the ChoquetKit CLI"""

    def __init__(self):
        self.parser = build_parser()
        self.history: Optional[SQLiteLogger] = None

    def setup_logging(self, args: argparse.Namespace) -> None:
        level = args.log_level or ("ERROR" if args.quiet else config.LOG_LEVEL)
        logging.basicConfig(format=LOG_FORMAT, stream=sys.stderr)
        logging.getLogger().setLevel(getattr(logging, level))

    def setup_history(self, args: argparse.Namespace) -> None:
        db_path = args.history or config.HISTORY_DB
        if db_path:
            self.history = safe_execute(SQLiteLogger, db_path, context="history setup")

    def check_configuration(self) -> None:
        status = validate_config()
        for issue in status['issues']:
            logger.error(f"Configuration issue: {issue}")
        for warning in status['warnings']:
            logger.warning(f"Configuration warning: {warning}")

    def run(self, argv: Optional[List[str]] = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as exit_request:
            # argparse exits 0 for --help and 2 for usage errors
            return EXIT_OK if exit_request.code in (0, None) else EXIT_USAGE

        self.setup_logging(args)
        self.check_configuration()
        self.setup_history(args)

        command = COMMANDS[args.verb](history=self.history)
        status = command.execute(args)
        logger.debug(f"Command metrics: {command.get_metrics()}")

        if self.history is not None:
            arguments = {key: value for key, value in vars(args).items() if key != "verb"}
            safe_execute(self.history.log_command, args.verb, arguments, status,
                         context="history logging")

        logger.debug(f"Error stats: {global_error_handler.get_error_stats()}")
        return status


def main(argv: Optional[List[str]] = None) -> int:
    return ChoquetKitApp().run(argv)


if __name__ == "__main__":
    sys.exit(main())
