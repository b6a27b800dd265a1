import argparse
import json
import logging
from pathlib import Path
from typing import Callable

from praaf.cli.commands.base_command import BaseCommand
from praaf.cli.output import render
from praaf.errors import EXIT_FAIL, EXIT_SUCCESS
from praaf.io import export_dot, serialize_praaf
from praaf.models import GroundTruth, format_probability
from praaf.normal_form import check_equivalence, to_normal_form

logger = logging.getLogger(__name__)


def _add_output_argument(parser: argparse.ArgumentParser, help: str = "write to this file instead of stdout") -> None:
    parser.add_argument("-o", "--out", default=None, help=help)


class TransformCommand(BaseCommand):
    """Rewrite a framework into probabilistic attack normal form"""

    name = "transform"
    help = "move argument probabilities onto attacks from the ground truth"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        _add_output_argument(parser, "write to this file instead of stdout; a .json name writes JSON")

    def execute(self, args: argparse.Namespace) -> int:
        praaf = self.load(args.file)
        certificate = to_normal_form(praaf, GroundTruth(self.config.eta_id))
        if args.out and Path(args.out).suffix == ".json":
            document = json.dumps(certificate.transformed.to_dict(), indent=2) + "\n"
        else:
            document = serialize_praaf(certificate.transformed)

        report: Callable[[str], None]
        if args.out:
            Path(args.out).write_text(document, encoding="utf-8")
            logger.info(f"Wrote normal form to {args.out}")
            report = self.emit
        else:
            self.emit(document)
            report = self.note

        if not certificate.mapping:
            report("no probabilistic arguments\n")
            return EXIT_SUCCESS

        rows = [{
            "argument": entry.argument,
            "probability": format_probability(entry.original_p),
            "attack": str(entry.attack),
            "attack_probability": format_probability(entry.attack_p)
        } for entry in certificate.mapping]
        report(render(
            ["argument", "probability", "attack", "attack_probability"],
            rows,
            self.config.output,
            numeric=("probability", "attack_probability")
        ))
        return EXIT_SUCCESS


class EquivCommand(BaseCommand):
    """Check that a framework and its normal form define the same distribution"""

    name = "equiv"
    help = "compare extension distributions, ignoring the ground truth in the second file"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("file_a", help="original .praaf file")
        parser.add_argument("file_b", help=".praaf file containing the ground truth")

    def execute(self, args: argparse.Namespace) -> int:
        original = self.load(args.file_a)
        transformed = self.load(args.file_b)
        report = check_equivalence(
            original,
            transformed,
            GroundTruth(self.config.eta_id),
            self.config.semantics,
            self.config.tolerance,
            self.config.mode,
            **self.caps
        )

        if not report.passed:
            rows = [{
                "extension": str(d.extension),
                "original": format_probability(d.original),
                "transformed": format_probability(d.transformed),
                "difference": format_probability(abs(d.original - d.transformed))
            } for d in report.discrepancies]
            self.emit(render(
                ["extension", "original", "transformed", "difference"],
                rows,
                self.config.output,
                numeric=("original", "transformed", "difference")
            ))
        if self.config.output == "table":
            self.emit(
                f"{report.verdict}: {report.compared} {report.sigma.value} extensions compared "
                f"({report.mode.value} worlds, tolerance {report.tolerance:g})\n"
            )
        else:
            summary = {
                "verdict": report.verdict,
                "compared": report.compared,
                "semantics": report.sigma.value,
                "mode": report.mode.value,
                "tolerance": report.tolerance
            }
            self.emit(render(list(summary), [summary], self.config.output, numeric=()))
        return EXIT_SUCCESS if report.passed else EXIT_FAIL


class DotCommand(BaseCommand):
    """Export a framework as a DOT graph"""

    name = "dot"
    help = "export the framework as a DOT digraph"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        _add_output_argument(parser)

    def execute(self, args: argparse.Namespace) -> int:
        praaf = self.load(args.file)
        graph = export_dot(praaf, self.config.eta_id)
        if args.out:
            Path(args.out).write_text(graph, encoding="utf-8")
            logger.info(f"Wrote DOT graph to {args.out}")
        else:
            self.emit(graph)
        return EXIT_SUCCESS
