"""Engine error classes."""
from dataclasses import dataclass
from typing import List, Optional

EXIT_SUCCESS = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2
EXIT_CAPACITY = 3


class PraafError(Exception):
    """Base class for engine errors."""
    exit_code = EXIT_INPUT_ERROR


class DomainError(PraafError):
    """An argument, attack or set does not belong to the framework it is used with."""
    pass


class UsageError(PraafError):
    """An unknown semantics, mode or stance name was requested."""
    pass


class CapacityError(PraafError):
    """An enumeration would exceed the configured cap."""
    exit_code = EXIT_CAPACITY

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(
            f"Too many {what}: {size} exceeds the cap of {cap} "
            f"(raise it with --max-elements / --max-arguments)"
        )


@dataclass(frozen=True)
class Violation:
    """A single broken framework invariant."""
    code: str
    location: str
    message: str
    line: Optional[int] = None
    column: Optional[int] = None

    def __str__(self) -> str:
        where = self.location
        if self.line is not None:
            where = f"line {self.line}, column {self.column}: {where}"
        return f"[{self.code}] {where}: {self.message}"


class ValidationError(PraafError):
    """A framework breaks one or more invariants."""

    def __init__(self, violations: List[Violation]):
        self.violations = list(violations)
        summary = "; ".join(str(v) for v in self.violations)
        super().__init__(f"Invalid framework: {summary}")


class ParseError(ValidationError):
    """A .praaf document could not be parsed."""

    @property
    def first(self) -> Violation:
        return self.violations[0]


class NormalFormError(PraafError):
    """A framework is not a well-formed normal form for the given ground truth."""
    pass


class ConfigurationError(PraafError):
    """Invalid configuration, including a ground-truth id collision."""
    pass
