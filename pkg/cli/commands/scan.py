"""scan: randomized check of both directions of the equivalence"""

from argparse import Namespace

from cli.command_base import Command
from engine.verifier import equivalence_scan
from utils import config
from utils.error_handler import EXIT_INTERNAL, EXIT_OK, BudgetExceededError, safe_execute
from utils.exporter import export_scan_csv, export_scan_machine, export_scan_text
from utils.validators import OptionValidator


class ScanCommand(Command):
    def __init__(self, **kwargs):
        super().__init__(name="scan", **kwargs)

    def validate_input(self, args: Namespace):
        validation = OptionValidator.validate_scan_options(
            args.n, args.count, args.max_value, allow_sampling=args.sample)
        if validation.get('within_budget') is False and not args.sample:
            raise BudgetExceededError(validation['required_pairs'], config.SCAN_BUDGET)
        return validation

    def process(self, args: Namespace) -> int:
        report = equivalence_scan(
            args.n, args.count, args.max_value, args.seed,
            workers=args.workers, allow_sampling=args.sample,
        )

        if self.history is not None:
            safe_execute(self.history.save_scan, report, context="scan history")
        if args.csv:
            export_scan_csv(report, args.csv)

        self.emit(export_scan_machine(report) if self.machine() else export_scan_text(report))
        # Any disagreement is an implementation bug
        return EXIT_OK if report.ok else EXIT_INTERNAL
