import argparse
import logging
from typing import Any, Dict, List

from praaf.cli.commands.base_command import BaseCommand
from praaf.cli.output import render
from praaf.constellation import enumerate_worlds, probabilistic_elements, world_literals
from praaf.errors import EXIT_SUCCESS, UsageError
from praaf.models import AAF, GroundTruth, format_probability
from praaf.normal_form import acceptable_extensions, is_normal_form, translate_assignment
from praaf.semantics import enumerate_extensions, sorted_extensions

logger = logging.getLogger(__name__)


class WorldsCommand(BaseCommand):
    """List the possible worlds of a framework with their probabilities"""

    name = "worlds"
    help = "list possible worlds with probability and proper flag"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument(
            "--extensions",
            action="store_true",
            help="also list each world's extensions under --semantics"
        )

    def execute(self, args: argparse.Namespace) -> int:
        praaf = self.load(args.file)
        eta = GroundTruth(self.config.eta_id)
        show_equivalent = eta.eta_id in praaf.args and is_normal_form(praaf)

        columns = ["index", "world", "probability", "proper"]
        if show_equivalent:
            columns.append("equivalent")
        if args.extensions:
            columns.append(self.config.semantics.value)

        rows: List[Dict[str, Any]] = []
        total = praaf.zero
        for world in enumerate_worlds(praaf, self.config.mode, self.config.max_elements, eta.eta_id):
            total += world.probability
            row: Dict[str, Any] = {
                "index": world.index,
                "world": " ".join(world_literals(world)) or "-",
                "probability": format_probability(world.probability),
                "proper": world.proper
            }
            if show_equivalent:
                row["equivalent"] = " ".join(translate_assignment(world, eta)) or "-"
            if args.extensions:
                extensions = enumerate_extensions(world.realized, self.config.semantics, self.config.max_arguments)
                row[self.config.semantics.value] = " ".join(str(s) for s in sorted_extensions(extensions))
            rows.append(row)

        logger.info(f"Listed {len(rows)} {self.config.mode.value} worlds")
        self.emit(render(columns, rows, self.config.output, footer={
            "index": "total",
            "probability": format_probability(total)
        }))
        return EXIT_SUCCESS


class ExtensionsCommand(BaseCommand):
    """List the extensions of a concrete framework or of one selected world"""

    name = "extensions"
    help = "list the extensions of an all-certain framework or of one world"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument(
            "--world",
            type=int,
            default=None,
            help="index of the world to realize (as listed by the worlds command)"
        )
        parser.add_argument(
            "--acceptable",
            action="store_true",
            help="only list extensions containing the ground truth (--eta)"
        )

    def _select(self, args: argparse.Namespace) -> AAF:
        praaf = self.load(args.file)
        if args.world is None:
            if probabilistic_elements(praaf):
                raise UsageError("The framework is probabilistic; select a world with --world <index>")
            return praaf.as_aaf()

        for world in enumerate_worlds(praaf, self.config.mode, self.config.max_elements, self.config.eta_id):
            if world.index == args.world:
                logger.info(f"Selected world {world.index}: {' '.join(world_literals(world)) or '-'}")
                return world.realized
        raise UsageError(f"There is no {self.config.mode.value} world with index {args.world}")

    def execute(self, args: argparse.Namespace) -> int:
        framework = self._select(args)
        if args.acceptable:
            eta = GroundTruth(self.config.eta_id)
            extensions = acceptable_extensions(framework, self.config.semantics, eta, self.config.max_arguments)
        else:
            extensions = enumerate_extensions(framework, self.config.semantics, self.config.max_arguments)
        rows = [{"extension": str(s)} for s in sorted_extensions(extensions)]
        self.emit(render(["extension"], rows, self.config.output))
        return EXIT_SUCCESS
