import argparse
import json
import logging
import sys
from abc import ABC, abstractmethod
from pathlib import Path

from praaf.config import EngineConfig
from praaf.errors import EXIT_INPUT_ERROR, ParseError, PraafError, Violation
from praaf.io import parse_praaf
from praaf.models import PrAAF

logger = logging.getLogger(__name__)


class BaseCommand(ABC):
    """Base class for CLI subcommands"""

    name: str = ""
    help: str = ""

    def __init__(self, config: EngineConfig):
        self.config = config

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        """Register the subcommand's own arguments."""
        parser.add_argument("file", help="Input .praaf file")

    def run(self, args: argparse.Namespace) -> int:
        """
        Run the command and map engine errors to exit codes.

        Args:
            args: Parsed command-line arguments

        Returns:
            int: The process exit code
        """
        try:
            logger.debug(f"Running {self.name} with {self.config}")
            return self.execute(args)
        except PraafError as e:
            logger.error(f"{self.name} failed: {e}")
            self.fail(str(e))
            return e.exit_code
        except OSError as e:
            logger.error(f"{self.name} failed: {e}")
            self.fail(f"{e.strerror or e}: {e.filename}" if e.filename else str(e))
            return EXIT_INPUT_ERROR

    @abstractmethod
    def execute(self, args: argparse.Namespace) -> int:
        """
        Do the command's work. This method should be implemented by subclasses.

        Args:
            args: Parsed command-line arguments

        Returns:
            int: The process exit code
        """
        pass

    def load(self, path: str) -> PrAAF:
        """Read and parse a .praaf file, or a .json file as written by `transform -o out.json`."""
        text = Path(path).read_text(encoding="utf-8")
        if Path(path).suffix == ".json":
            praaf = self._load_json(path, text)
        else:
            praaf = parse_praaf(text, exact=self.config.exact)
        logger.info(f"Loaded {path}: {len(praaf.args)} arguments, {len(praaf.atts)} attacks")
        return praaf

    def emit(self, text: str) -> None:
        sys.stdout.write(text)

    def note(self, text: str) -> None:
        sys.stderr.write(text.rstrip("\n") + "\n")

    def fail(self, message: str) -> None:
        sys.stderr.write(f"error: {message}\n")

    @property
    def caps(self) -> dict:
        return {
            "max_elements": self.config.max_elements,
            "max_arguments": self.config.max_arguments
        }

    def _load_json(self, path: str, text: str) -> PrAAF:
        try:
            return PrAAF.from_dict(json.loads(text), exact=self.config.exact)
        except (ValueError, KeyError, TypeError) as e:
            raise ParseError([Violation("invalid-json", path, str(e))]) from e
