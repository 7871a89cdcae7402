"""generate: seeded random capacity file"""

from argparse import Namespace

from cli.command_base import Command
from engine.capacity import check_submodular_exhaustive, random_monotone_capacity, random_submodular_capacity
from utils.error_handler import EXIT_OK, CrossCheckError
from utils.file_formats import parse_capacity_text, serialize_capacity, write_text_file
from utils.validators import OptionValidator

GENERATORS = {
    "monotone": random_monotone_capacity,
    "submodular": random_submodular_capacity,
}


class GenerateCommand(Command):
    def __init__(self, **kwargs):
        super().__init__(name="generate", **kwargs)

    def validate_input(self, args: Namespace):
        return OptionValidator.validate_generate_options(args.n, args.kind)

    def process(self, args: Namespace) -> int:
        capacity = GENERATORS[args.kind](args.n, args.seed)
        text = serialize_capacity(capacity)

        if parse_capacity_text(text) != capacity:
            raise CrossCheckError("generated capacity does not survive a parse round trip")
        if args.kind == "submodular" and check_submodular_exhaustive(capacity) is not None:
            raise CrossCheckError("submodular generator produced a violating capacity")

        if args.out:
            write_text_file(args.out, text)
            self.logger.info(f"Wrote {args.kind} capacity (n={args.n}) to {args.out}")
        else:
            self.emit(text)
        return EXIT_OK
