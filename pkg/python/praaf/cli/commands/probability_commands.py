import argparse
import logging

from praaf.cli.commands.base_command import BaseCommand
from praaf.cli.output import render
from praaf.constellation import (
    acceptance_probability,
    count_vacuous_worlds,
    extension_distribution,
    extension_probability
)
from praaf.errors import EXIT_SUCCESS
from praaf.models import ArgumentSet, PrAAF, Stance, format_probability

logger = logging.getLogger(__name__)


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"{value} is not a positive count")
    return number


class ProbCommand(BaseCommand):
    """Probability that a set of arguments is an extension"""

    name = "prob"
    help = "probability that a set is an extension under --semantics"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        query = parser.add_mutually_exclusive_group(required=True)
        query.add_argument("--set", dest="members", default=None, help='comma separated arguments, "" for the empty set')
        query.add_argument("--top", type=_positive, default=None, help="list the k most probable extensions instead")

    def execute(self, args: argparse.Namespace) -> int:
        praaf = self.load(args.file)
        if args.top is not None:
            return self._top(praaf, args.top)

        members = ArgumentSet.parse(args.members)
        p = extension_probability(members, self.config.semantics, praaf, self.config.mode, **self.caps)
        logger.info(f"P({members} is {self.config.semantics.value}) = {p}")
        if self.config.output == "table":
            self.emit(format_probability(p) + "\n")
        else:
            self.emit(render(["set", "semantics", "mode", "probability"], [{
                "set": str(members),
                "semantics": self.config.semantics.value,
                "mode": self.config.mode.value,
                "probability": format_probability(p)
            }], self.config.output))
        return EXIT_SUCCESS

    def _top(self, praaf: PrAAF, k: int) -> int:
        distribution = extension_distribution(praaf, self.config.semantics, self.config.mode, **self.caps)
        rows = [
            {"extension": str(s), "probability": format_probability(p)}
            for s, p in distribution.most_probable(k)
        ]
        # the footer sums every extension, listed or not
        self.emit(render(["extension", "probability"], rows, self.config.output, footer={
            "extension": "total",
            "probability": format_probability(distribution.total_mass)
        }))
        return EXIT_SUCCESS


class AcceptCommand(BaseCommand):
    """Probability that an argument is credulously or skeptically accepted"""

    name = "accept"
    help = "credulous or skeptical acceptance probability of an argument"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--arg", dest="argument", required=True, help="the argument")
        parser.add_argument(
            "--stance",
            choices=[s.value for s in Stance],
            default=Stance.CREDULOUS.value,
            help="credulous (some extension) or skeptical (every extension)"
        )

    def execute(self, args: argparse.Namespace) -> int:
        praaf = self.load(args.file)
        stance = Stance.parse(args.stance)
        p = acceptance_probability(
            args.argument, self.config.semantics, stance, praaf, self.config.mode, **self.caps
        )
        if stance == Stance.SKEPTICAL:
            vacuous = count_vacuous_worlds(praaf, self.config.semantics, self.config.mode, **self.caps)
            if vacuous:
                self.note(
                    f"note: {vacuous} worlds have no {self.config.semantics.value} extension "
                    f"and count as skeptically accepting every argument they contain"
                )

        if self.config.output == "table":
            self.emit(format_probability(p) + "\n")
        else:
            self.emit(render(["argument", "stance", "semantics", "mode", "probability"], [{
                "argument": args.argument,
                "stance": stance.value,
                "semantics": self.config.semantics.value,
                "mode": self.config.mode.value,
                "probability": format_probability(p)
            }], self.config.output))
        return EXIT_SUCCESS
