from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from praaf.errors import ValidationError
from praaf.models.framework_models import AAF, ArgumentSet, AttackEdge, SemanticsName, WorldMode

Probability = Union[float, Fraction]

DEFAULT_ETA_ID = "eta"
DEFAULT_MAX_ELEMENTS = 20
DEFAULT_MAX_ARGUMENTS = 20
DEFAULT_TOLERANCE = 1e-9


def to_probability(value: Any, exact: bool = False) -> Probability:
    """
    Convert a number or decimal literal to the probability type in use.

    Floats are converted through their shortest repr so that 0.3 becomes 3/10
    in exact mode.
    """
    if exact:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, float):
            return Fraction(repr(value))
        return Fraction(str(value))
    return float(value)


def format_probability(p: Probability, digits: int = 12) -> str:
    """
    Render a probability with up to `digits` significant digits, trailing zeros trimmed.

    A value that would round to 0 or 1 without being 0 or 1 is written in full,
    so that a probabilistic element never reads back as certain or absent.
    """
    text = f"{float(p):.{digits}g}"
    if 'e' in text or 'E' in text:
        text = f"{float(p):.{digits + 8}f}".rstrip('0').rstrip('.')
    text = text or "0"
    if (text == "1" and p != 1) or (text == "0" and p != 0):
        if isinstance(p, Fraction):
            with localcontext() as context:
                context.prec = 60
                return format(Decimal(p.numerator) / Decimal(p.denominator), "f")
        return repr(float(p))
    return text


class ElementKind(str, Enum):
    ARGUMENT = "argument"
    ATTACK = "attack"


@dataclass(frozen=True)
class ProbabilisticElement:
    """An argument or an attack whose probability is strictly below 1"""
    kind: ElementKind
    ref: Union[str, AttackEdge]
    p: Probability

    @property
    def is_argument(self) -> bool:
        return self.kind == ElementKind.ARGUMENT

    @property
    def label(self) -> str:
        return self.ref if isinstance(self.ref, str) else f"({self.ref})"

    def literal(self, present: bool) -> str:
        """Render the element as a world literal, e.g. `c`, `!c`, `(a->c)`, `!(a->c)`"""
        return self.label if present else f"!{self.label}"


@dataclass(frozen=True)
class PrAAF:
    """
    A probabilistic argumentation framework (Args, P_Args, Atts, P_Atts).

    The plain constructor stores whatever it is given so that `validate` can
    report on it; use `create` to build a framework that is known to be valid.
    """
    args: FrozenSet[str] = field(default_factory=frozenset)
    p_args: Mapping[str, Probability] = field(default_factory=dict)
    atts: FrozenSet[AttackEdge] = field(default_factory=frozenset)
    p_atts: Mapping[AttackEdge, Probability] = field(default_factory=dict)

    @classmethod
    def create(
            cls,
            p_args: Mapping[str, Any],
            p_atts: Optional[Mapping[AttackEdge, Any]] = None,
            exact: bool = False
    ) -> 'PrAAF':
        """
        Build and validate a framework from its two probability maps.

        Args:
            p_args: Probability of every argument (1 for certain arguments)
            p_atts: Probability of every attack (1 for certain attacks)
            exact: Store probabilities as fractions

        Raises:
            ValidationError: If any invariant is broken
        """
        from praaf.constellation import validate

        p_atts = p_atts or {}
        praaf = cls(
            args=frozenset(p_args),
            p_args={a: to_probability(p, exact) for a, p in p_args.items()},
            atts=frozenset(p_atts),
            p_atts={e: to_probability(p, exact) for e, p in p_atts.items()}
        )
        violations = validate(praaf)
        if violations:
            raise ValidationError(violations)
        return praaf

    @classmethod
    def from_aaf(cls, aaf: AAF, exact: bool = False) -> 'PrAAF':
        """Lift a concrete framework to an all-certain PrAAF"""
        one = to_probability(1, exact)
        return cls(
            args=aaf.args,
            p_args={a: one for a in aaf.args},
            atts=aaf.atts,
            p_atts={e: one for e in aaf.atts}
        )

    @classmethod
    def from_dict(cls, data: dict, exact: bool = False) -> 'PrAAF':
        if not isinstance(data, dict):
            raise ValueError("Invalid PrAAF format")
        p_args = {str(a['id']): a.get('p', 1) for a in data.get('args', [])}
        p_atts = {AttackEdge.from_dict(e): e.get('p', 1) for e in data.get('atts', [])}
        return cls.create(p_args, p_atts, exact=exact)

    def to_dict(self) -> dict:
        return {
            'args': [{'id': a, 'p': float(self.p_args[a])} for a in sorted(self.args)],
            'atts': [
                {**e.to_dict(), 'p': float(self.p_atts[e])} for e in sorted(self.atts)
            ]
        }

    @property
    def exact(self) -> bool:
        return any(isinstance(p, Fraction) for p in self.p_args.values()) or any(
            isinstance(p, Fraction) for p in self.p_atts.values()
        )

    @property
    def one(self) -> Probability:
        return Fraction(1) if self.exact else 1.0

    @property
    def zero(self) -> Probability:
        return Fraction(0) if self.exact else 0.0

    def is_certain_argument(self, argument: str) -> bool:
        return self.p_args.get(argument) == 1

    def is_certain_attack(self, edge: AttackEdge) -> bool:
        return self.p_atts.get(edge) == 1

    @property
    def probabilistic_arguments(self) -> List[str]:
        return sorted(a for a in self.args if self.p_args.get(a, 1) < 1)

    @property
    def probabilistic_attacks(self) -> List[AttackEdge]:
        return sorted(e for e in self.atts if self.p_atts.get(e, 1) < 1)

    def as_aaf(self) -> AAF:
        """The underlying (Args, Atts) graph, ignoring probabilities"""
        return AAF(args=frozenset(self.args), atts=frozenset(self.atts))


@dataclass(frozen=True)
class World:
    """
    One possible world of a PrAAF.

    `assignment` lists (element, present) pairs in world order. In induced
    mode, attacks conditioned out by an absent endpoint are not assigned.
    """
    index: int
    assignment: Tuple[Tuple[ProbabilisticElement, bool], ...]
    probability: Probability
    realized: AAF
    proper: bool

    @cached_property
    def assignment_map(self) -> Dict[ProbabilisticElement, bool]:
        return dict(self.assignment)

    @property
    def literals(self) -> List[str]:
        return [element.literal(present) for element, present in self.assignment]


@dataclass(frozen=True)
class ExtensionDistribution:
    """
    Probability that each argument set is a sigma-extension.

    Entries need not sum to one since every world contributes to all of its
    extensions.
    """
    entries: Mapping[ArgumentSet, Probability]
    sigma: SemanticsName
    mode: WorldMode

    def get(self, members: Union[ArgumentSet, Iterable[str]]) -> Probability:
        key = members if isinstance(members, ArgumentSet) else ArgumentSet.of(members)
        zero = Fraction(0) if self.is_exact else 0.0
        return self.entries.get(key, zero)

    @property
    def is_exact(self) -> bool:
        return any(isinstance(p, Fraction) for p in self.entries.values())

    def sorted_items(self) -> List[Tuple[ArgumentSet, Probability]]:
        return sorted(self.entries.items(), key=lambda item: item[0].sort_key)

    @property
    def total_mass(self) -> Probability:
        total: Probability = 0
        for _, p in self.sorted_items():
            total += p
        return total

    def most_probable(self, k: int) -> List[Tuple[ArgumentSet, Probability]]:
        """The k most probable extensions, ties broken by canonical set order"""
        return sorted(self.entries.items(), key=lambda item: (-item[1], item[0].sort_key))[:k]


@dataclass(frozen=True)
class GroundTruth:
    """The never-attacked, always-accepted argument used by the normal form"""
    eta_id: str = DEFAULT_ETA_ID


@dataclass(frozen=True)
class MappingEntry:
    """One probabilistic argument moved onto an attack from the ground truth"""
    argument: str
    original_p: Probability
    attack: AttackEdge
    attack_p: Probability


@dataclass(frozen=True)
class NormalFormCertificate:
    """The result of moving argument probabilities onto attacks from the ground truth"""
    original: PrAAF
    transformed: PrAAF
    eta: GroundTruth
    mapping: Tuple[MappingEntry, ...] = ()

    @property
    def added_arguments(self) -> int:
        return len(self.transformed.args) - len(self.original.args)

    @property
    def added_attacks(self) -> int:
        return len(self.transformed.atts) - len(self.original.atts)


def complement(p: Probability) -> Probability:
    """
    Return 1 - p.

    Floats are complemented through their shortest decimal form so that
    complementing twice gives back the original value.
    """
    if isinstance(p, Fraction):
        return 1 - p
    return float(Decimal(1) - Decimal(repr(float(p))))
