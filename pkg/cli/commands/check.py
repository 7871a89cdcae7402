"""check: decide submodularity of a capacity file"""

from argparse import Namespace

from cli.command_base import Command
from cli.rendering import render_machine_violation, render_submodularity_violation
from engine.capacity import check_submodular_exhaustive
from utils.error_handler import EXIT_NEGATIVE, EXIT_OK
from utils.file_formats import read_capacity_file


class CheckCommand(Command):
    def __init__(self, **kwargs):
        super().__init__(name="check", **kwargs)

    def process(self, args: Namespace) -> int:
        capacity = read_capacity_file(args.capacity_file)
        report = check_submodular_exhaustive(capacity)

        if report is None:
            self.emit("verdict=submodular" if self.machine() else "submodular")
            return EXIT_OK

        self.logger.info(f"Violation found: {report}")
        if self.machine():
            self.emit("verdict=violation\n" + render_machine_violation(report))
        else:
            self.emit("not submodular\n" + render_submodularity_violation(report))
        return EXIT_NEGATIVE
