"""
CLI subcommands.
"""

from .base_command import BaseCommand
from .normal_form_commands import DotCommand, EquivCommand, TransformCommand
from .probability_commands import AcceptCommand, ProbCommand
from .world_commands import ExtensionsCommand, WorldsCommand

COMMANDS = [
    WorldsCommand,
    ExtensionsCommand,
    ProbCommand,
    AcceptCommand,
    TransformCommand,
    EquivCommand,
    DotCommand
]
