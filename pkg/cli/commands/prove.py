"""prove: certificate for int(X+Y) <= int X + int Y"""

from argparse import Namespace

from cli.command_base import Command
from engine.proof_kit import induction_certificate, rational_certificate, render_certificate
from engine.verifier import indicator_counterexample
from utils.error_handler import EXIT_INTERNAL, EXIT_NEGATIVE, EXIT_OK, DimensionMismatchError
from utils.file_formats import format_rational, read_capacity_file, read_function_file


class ProveCommand(Command):
    def __init__(self, **kwargs):
        super().__init__(name="prove", **kwargs)

    def process(self, args: Namespace) -> int:
        capacity = read_capacity_file(args.capacity_file)
        x_function = read_function_file(args.x_file)
        y_function = read_function_file(args.y_file)
        for function in (x_function, y_function):
            if len(function) != capacity.n:
                raise DimensionMismatchError(capacity.n, len(function))

        counterexample = indicator_counterexample(capacity)
        if counterexample is not None:
            a_event, b_event, report = counterexample
            if self.machine():
                self.emit(f"verdict=not_submodular\nA={a_event.mask}\nB={b_event.mask}\n"
                          f"lhs={format_rational(report.lhs)}\nrhs={format_rational(report.rhs)}")
            else:
                self.emit("not submodular, counterexample X=1_A, Y=1_B\n"
                          f"A={a_event} B={b_event}\n"
                          f"int(X+Y) = {format_rational(report.lhs)}\n"
                          f"int X + int Y = {format_rational(report.rhs)}")
            return EXIT_NEGATIVE

        integral_inputs = all(f.is_integer_valued() and min(f.values, default=0) >= 0
                              for f in (x_function, y_function))
        if integral_inputs:
            certificate = induction_certificate(
                capacity, x_function.to_int_function(), y_function.to_int_function())
        else:
            self.logger.info("Rational inputs, reducing to integer functions first")
            certificate = rational_certificate(capacity, x_function, y_function)

        if self.machine():
            self.emit(f"valid={'true' if certificate.is_valid() else 'false'}\n"
                      f"depth={certificate.depth}\nsteps={len(certificate.steps)}\n"
                      f"final_lhs={format_rational(certificate.final_lhs)}\n"
                      f"final_rhs={format_rational(certificate.final_rhs)}")
        else:
            self.emit(render_certificate(certificate))
        return EXIT_OK if certificate.is_valid() else EXIT_INTERNAL
