"""integrate: exact Choquet integral of a function file"""

from argparse import Namespace

from cli.command_base import Command
from engine.choquet import choquet_layer_cake, choquet_sorted
from utils.error_handler import EXIT_OK, CrossCheckError
from utils.file_formats import format_rational, read_capacity_file, read_function_file

METHODS = ("both", "layer", "sorted")


class IntegrateCommand(Command):
    def __init__(self, **kwargs):
        super().__init__(name="integrate", **kwargs)

    def validate_input(self, args: Namespace):
        errors = []
        if args.method not in METHODS:
            errors.append(f"--method must be one of {', '.join(METHODS)}")
        return {'valid': not errors, 'errors': errors, 'warnings': []}

    def process(self, args: Namespace) -> int:
        capacity = read_capacity_file(args.capacity_file)
        function = read_function_file(args.function_file)

        if args.method == "sorted":
            value = choquet_sorted(capacity, function)
        else:
            value = choquet_layer_cake(capacity, function)
            if args.method == "both":
                fast = choquet_sorted(capacity, function)
                if fast != value:
                    raise CrossCheckError(
                        f"layer-cake gives {value}, sorted levels give {fast}",
                        details={'capacity': args.capacity_file, 'function': args.function_file},
                    )

        text = format_rational(value)
        self.emit(f"value={text}" if self.machine() else text)
        return EXIT_OK
