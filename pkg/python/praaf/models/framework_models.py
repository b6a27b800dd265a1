import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, total_ordering
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

from praaf.errors import DomainError, UsageError

ARGUMENT_ID_PATTERN = re.compile(r"[A-Za-z0-9_]+")


def is_argument_id(token: str) -> bool:
    """Check that a token is a valid argument id"""
    return bool(ARGUMENT_ID_PATTERN.fullmatch(token))


@total_ordering
@dataclass(frozen=True)
class AttackEdge:
    """A directed attack source -> target between two argument ids"""
    source: str
    target: str

    def __lt__(self, other: 'AttackEdge') -> bool:
        return (self.source, self.target) < (other.source, other.target)

    def __str__(self) -> str:
        return f"{self.source}->{self.target}"

    @classmethod
    def from_dict(cls, data: dict) -> 'AttackEdge':
        if not isinstance(data, dict) or 'source' not in data or 'target' not in data:
            raise ValueError("Invalid attack format")
        return cls(source=str(data['source']), target=str(data['target']))

    def to_dict(self) -> dict:
        return {'source': self.source, 'target': self.target}


@total_ordering
@dataclass(frozen=True)
class ArgumentSet:
    """
    A set of argument ids kept in lexicographic order.

    Sets order by size first and then lexicographically, which is the order
    extensions are listed in.
    """
    members: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'members', tuple(sorted(set(self.members))))

    @classmethod
    def of(cls, items: Iterable[str] = ()) -> 'ArgumentSet':
        return cls(tuple(items))

    @classmethod
    def parse(cls, text: str) -> 'ArgumentSet':
        """Parse a comma separated list such as "a,b,d" ("" and "{}" are the empty set)."""
        text = text.strip()
        if text.startswith('{') and text.endswith('}'):
            text = text[1:-1]
        return cls.of(token.strip() for token in text.split(',') if token.strip())

    def __iter__(self) -> Iterator[str]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.as_frozenset

    def __lt__(self, other: 'ArgumentSet') -> bool:
        return self.sort_key < other.sort_key

    @property
    def sort_key(self) -> Tuple[int, Tuple[str, ...]]:
        return len(self.members), self.members

    @cached_property
    def as_frozenset(self) -> FrozenSet[str]:
        return frozenset(self.members)

    def issubset(self, other: Iterable[str]) -> bool:
        return self.as_frozenset.issubset(other)

    def union(self, other: Iterable[str]) -> 'ArgumentSet':
        return ArgumentSet.of(self.as_frozenset.union(other))

    def without(self, item: str) -> 'ArgumentSet':
        return ArgumentSet.of(m for m in self.members if m != item)

    def __str__(self) -> str:
        return "{" + ",".join(self.members) + "}"


class SemanticsName(str, Enum):
    CONFLICT_FREE = "conflict-free"
    ADMISSIBLE = "admissible"
    COMPLETE = "complete"
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    STABLE = "stable"

    @classmethod
    def parse(cls, name: str) -> 'SemanticsName':
        try:
            return cls(name.strip().lower())
        except ValueError as e:
            choices = ", ".join(s.value for s in cls)
            raise UsageError(f"Unknown semantics '{name}' (expected one of: {choices})") from e


class WorldMode(str, Enum):
    RAW = "raw"
    INDUCED = "induced"

    @classmethod
    def parse(cls, name: str) -> 'WorldMode':
        try:
            return cls(name.strip().lower())
        except ValueError as e:
            raise UsageError(f"Unknown world mode '{name}' (expected raw or induced)") from e


class Stance(str, Enum):
    CREDULOUS = "credulous"
    SKEPTICAL = "skeptical"

    @classmethod
    def parse(cls, name: str) -> 'Stance':
        try:
            return cls(name.strip().lower())
        except ValueError as e:
            raise UsageError(f"Unknown stance '{name}' (expected credulous or skeptical)") from e


@dataclass(frozen=True)
class AAF:
    """A concrete argumentation framework (Args, Atts)"""
    args: FrozenSet[str] = field(default_factory=frozenset)
    atts: FrozenSet[AttackEdge] = field(default_factory=frozenset)

    @classmethod
    def create(cls, args: Iterable[str], atts: Iterable[AttackEdge] = ()) -> 'AAF':
        """
        Build a well-formed framework.

        Raises:
            DomainError: If an attack names an undeclared argument
        """
        arg_set = frozenset(args)
        att_set = frozenset(atts)
        for edge in sorted(att_set):
            for endpoint in (edge.source, edge.target):
                if endpoint not in arg_set:
                    raise DomainError(f"Attack {edge} names unknown argument '{endpoint}'")
        return cls(args=arg_set, atts=att_set)

    @cached_property
    def sorted_args(self) -> List[str]:
        return sorted(self.args)

    @cached_property
    def attackers(self) -> Dict[str, FrozenSet[str]]:
        """Map every argument to the set of its attackers"""
        incoming: Dict[str, set] = {a: set() for a in self.args}
        for edge in self.atts:
            incoming[edge.target].add(edge.source)
        return {a: frozenset(sources) for a, sources in incoming.items()}

    def attackers_of(self, argument: str) -> FrozenSet[str]:
        self.require_argument(argument)
        return self.attackers[argument]

    def attacks(self, source: str, target: str) -> bool:
        return AttackEdge(source, target) in self.atts

    def require_argument(self, argument: str) -> None:
        if argument not in self.args:
            raise DomainError(f"Unknown argument '{argument}'")

    def require_subset(self, members: Iterable[str]) -> None:
        for argument in members:
            self.require_argument(argument)
