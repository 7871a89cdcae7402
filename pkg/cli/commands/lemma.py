"""lemma: render the lattice sets and check their union / intersection"""

from argparse import Namespace

from cli.command_base import Command
from cli.rendering import render_lemma_grid
from engine.proof_kit import check_lemma_identities, lemma_sets
from utils.error_handler import EXIT_NEGATIVE, EXIT_OK, WindowTooSmallError
from utils.validators import OptionValidator


class LemmaCommand(Command):
    def __init__(self, **kwargs):
        super().__init__(name="lemma", **kwargs)

    def validate_input(self, args: Namespace):
        if args.bound is None:
            args.bound = 2 * args.k + 3
        validation = OptionValidator.validate_lemma_options(args.k, args.bound)
        if args.k >= 0 and args.bound < 2 * args.k + 2:
            raise WindowTooSmallError(args.k, args.bound)
        return validation

    def process(self, args: Namespace) -> int:
        verdict = check_lemma_identities(args.k, args.bound)
        label = "ok" if verdict else "fail"

        if self.machine():
            a_set, b_set = lemma_sets(args.k, args.bound)
            self.emit(f"k={args.k}\nbound={args.bound}\n"
                      f"a_points={len(a_set)}\nb_points={len(b_set)}\n"
                      f"both={len(a_set & b_set)}\nverdict={label}")
        else:
            self.emit(render_lemma_grid(args.k, args.bound) + label)
        return EXIT_OK if verdict else EXIT_NEGATIVE
