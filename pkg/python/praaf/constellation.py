"""
Possible-world semantics of probabilistic argumentation frameworks.

Worlds are enumerated in one of two modes:

- raw: every probabilistic element is an independent variable, and a world
  realizes its framework by dropping attacks that lost an endpoint;
- induced: attack variables only exist when both endpoints are present, so
  the attack probability reads as conditional on its endpoints.
"""
import logging
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Set, Tuple, Union

from praaf.errors import CapacityError, DomainError, Violation
from praaf.models import (
    AAF,
    DEFAULT_ETA_ID,
    DEFAULT_MAX_ARGUMENTS,
    DEFAULT_MAX_ELEMENTS,
    ArgumentSet,
    AttackEdge,
    ElementKind,
    ExtensionDistribution,
    PrAAF,
    Probability,
    ProbabilisticElement,
    SemanticsName,
    Stance,
    World,
    WorldMode,
    is_argument_id
)
from praaf.semantics import SemanticsLike, _as_semantics, enumerate_extensions

logger = logging.getLogger(__name__)

Assignment = Union[World, Mapping[ProbabilisticElement, bool], Iterable[Tuple[ProbabilisticElement, bool]]]


def _as_mode(mode: Union[WorldMode, str]) -> WorldMode:
    return mode if isinstance(mode, WorldMode) else WorldMode.parse(mode)


def _presence(assignment: Assignment) -> Dict[Union[str, AttackEdge], bool]:
    """Map element refs (argument ids and attack edges) to their truth value"""
    if isinstance(assignment, World):
        pairs = assignment.assignment
    elif isinstance(assignment, Mapping):
        pairs = assignment.items()
    else:
        pairs = assignment
    return {element.ref: bool(present) for element, present in pairs}


def _check_probability(value: object, location: str) -> List[Violation]:
    if isinstance(value, bool) or not isinstance(value, (int, float, Fraction)):
        return [Violation("invalid-probability", location, f"probability {value!r} is not a number")]
    if value != value:
        return [Violation("invalid-probability", location, "probability is NaN")]
    if value == 0:
        return [Violation("zero-probability", location, "zero probability is redundant; remove the element")]
    if value < 0 or value > 1:
        return [Violation("probability-out-of-range", location, f"probability {value} is outside (0,1]")]
    return []


def validate(praaf: PrAAF) -> List[Violation]:
    """
    Check every PrAAF invariant.

    Args:
        praaf: The framework to check

    Returns:
        List[Violation]: Every violation found, empty when the framework is valid
    """
    violations: List[Violation] = []

    for argument in sorted(praaf.args):
        location = f"arg({argument})"
        if not is_argument_id(argument):
            violations.append(Violation("invalid-id", location, "argument ids use [A-Za-z0-9_] only"))
        if argument not in praaf.p_args:
            violations.append(Violation("missing-probability", location, "argument has no probability"))
        else:
            violations.extend(_check_probability(praaf.p_args[argument], location))
    for argument in sorted(set(praaf.p_args) - set(praaf.args)):
        violations.append(Violation("unknown-argument", f"arg({argument})", "probability given for an undeclared argument"))

    for edge in sorted(praaf.atts):
        location = f"att({edge.source},{edge.target})"
        for endpoint in (edge.source, edge.target):
            if endpoint not in praaf.args:
                violations.append(Violation("unknown-endpoint", location, f"unknown endpoint '{endpoint}'"))
        if edge not in praaf.p_atts:
            violations.append(Violation("missing-probability", location, "attack has no probability"))
        else:
            violations.extend(_check_probability(praaf.p_atts[edge], location))
    for edge in sorted(set(praaf.p_atts) - set(praaf.atts)):
        violations.append(Violation("unknown-attack", f"att({edge.source},{edge.target})", "probability given for an undeclared attack"))

    if violations:
        logger.debug(f"Validation found {len(violations)} violations")
    return violations


def probabilistic_elements(praaf: PrAAF) -> List[ProbabilisticElement]:
    """All elements with probability below 1: arguments first, then attacks, each sorted."""
    elements = [ProbabilisticElement(ElementKind.ARGUMENT, a, praaf.p_args[a]) for a in praaf.probabilistic_arguments]
    elements.extend(ProbabilisticElement(ElementKind.ATTACK, e, praaf.p_atts[e]) for e in praaf.probabilistic_attacks)
    return elements


def world_order(praaf: PrAAF) -> List[ProbabilisticElement]:
    """
    Digit order of the world counter: attacks first, then arguments.

    The first element is the most significant digit and 0 means absent, so the
    last probabilistic argument toggles fastest. Attacks from a ground truth
    count the other way round (see `ground_truth_attacks`).
    """
    elements = probabilistic_elements(praaf)
    return [e for e in elements if not e.is_argument] + [e for e in elements if e.is_argument]


def ground_truth_attacks(praaf: PrAAF, eta_id: Optional[str] = DEFAULT_ETA_ID) -> FrozenSet[ProbabilisticElement]:
    """
    Probabilistic attacks out of a certain, unattacked argument named `eta_id`.

    Such an attack stands for the absence of its target, so its digit 0 means
    present and worlds are listed in the order of the framework it came from.
    """
    if eta_id is None or not praaf.is_certain_argument(eta_id):
        return frozenset()
    if any(e.target == eta_id for e in praaf.atts):
        return frozenset()
    return frozenset(e for e in probabilistic_elements(praaf) if not e.is_argument and e.ref.source == eta_id)


def world_literals(world: World) -> List[str]:
    """Literals of a world in world order, e.g. `(a->c) !(b->c) c`"""
    return world.literals


def world_aaf(assignment: Assignment, praaf: PrAAF) -> AAF:
    """
    Realize the concrete framework of a world.

    Attacks that lost an endpoint are dropped, so the result is always well formed.
    """
    presence = _presence(assignment)
    args = frozenset(
        a for a in praaf.args if praaf.is_certain_argument(a) or presence.get(a, False)
    )
    atts = frozenset(
        e for e in praaf.atts
        if (praaf.is_certain_attack(e) or presence.get(e, False))
        and e.source in args and e.target in args
    )
    return AAF(args=args, atts=atts)


def is_proper_world(assignment: Assignment, praaf: PrAAF) -> bool:
    """
    Check that the literal elements of a raw world form a framework without dangling attacks.
    """
    presence = _presence(assignment)
    args = {a for a in praaf.args if praaf.is_certain_argument(a) or presence.get(a, False)}
    return all(
        e.source in args and e.target in args
        for e in praaf.atts
        if praaf.is_certain_attack(e) or presence.get(e, False)
    )


def world_probability(
        assignment: Assignment,
        praaf: PrAAF,
        mode: Union[WorldMode, str] = WorldMode.RAW
) -> Probability:
    """
    Product of P(e) over present elements and 1 - P(e) over absent ones.

    In induced mode, attack factors are only included when both endpoints are present.

    Raises:
        DomainError: If the assignment misses a required element
    """
    return _product(_presence(assignment), praaf, probabilistic_elements(praaf), _as_mode(mode))


def _product(
        presence: Dict[Union[str, AttackEdge], bool],
        praaf: PrAAF,
        elements: List[ProbabilisticElement],
        mode: WorldMode
) -> Probability:
    present_args = {a for a in praaf.args if praaf.is_certain_argument(a) or presence.get(a, False)}

    probability = praaf.one
    for element in elements:
        if (mode == WorldMode.INDUCED and not element.is_argument
                and not (element.ref.source in present_args and element.ref.target in present_args)):
            continue
        if element.ref not in presence:
            raise DomainError(f"Assignment does not cover probabilistic element {element.label}")
        probability *= element.p if presence[element.ref] else 1 - element.p
    return probability


def _check_capacity(praaf: PrAAF, max_elements: int) -> int:
    n = len(probabilistic_elements(praaf))
    if n > max_elements:
        logger.error(f"Refusing to enumerate 2^{n} worlds")
        raise CapacityError("probabilistic elements", n, max_elements)
    return n


def _digits(
        elements: List[ProbabilisticElement],
        mask: int,
        inverted: FrozenSet[ProbabilisticElement] = frozenset()
) -> Tuple[Tuple[ProbabilisticElement, bool], ...]:
    n = len(elements)
    return tuple((e, bool(mask >> (n - 1 - i) & 1) != (e in inverted)) for i, e in enumerate(elements))


def _raw_worlds(praaf: PrAAF, inverted: FrozenSet[ProbabilisticElement]) -> Iterator[World]:
    elements = probabilistic_elements(praaf)
    order = world_order(praaf)
    improper = 0
    for index in range(1 << len(order)):
        assignment = _digits(order, index, inverted)
        proper = is_proper_world(assignment, praaf)
        improper += not proper
        yield World(
            index=index,
            assignment=assignment,
            probability=_product(_presence(assignment), praaf, elements, WorldMode.RAW),
            realized=world_aaf(assignment, praaf),
            proper=proper
        )
    if improper:
        logger.warning(f"{improper} of {1 << len(order)} raw worlds are improper; their dangling attacks were dropped")


def _induced_worlds(praaf: PrAAF, inverted: FrozenSet[ProbabilisticElement]) -> Iterator[World]:
    elements = probabilistic_elements(praaf)
    order = world_order(praaf)
    arg_elements = [e for e in order if e.is_argument]
    att_elements = [e for e in order if not e.is_argument]
    certain_args = {a for a in praaf.args if praaf.is_certain_argument(a)}

    index = 0
    for arg_mask in range(1 << len(arg_elements)):
        arg_assignment = _digits(arg_elements, arg_mask)
        present = certain_args | {e.ref for e, value in arg_assignment if value}
        eligible = [e for e in att_elements if e.ref.source in present and e.ref.target in present]
        for att_mask in range(1 << len(eligible)):
            assignment = _digits(eligible, att_mask, inverted) + arg_assignment
            yield World(
                index=index,
                assignment=assignment,
                probability=_product(_presence(assignment), praaf, elements, WorldMode.INDUCED),
                realized=world_aaf(assignment, praaf),
                proper=True
            )
            index += 1


def enumerate_worlds(
        praaf: PrAAF,
        mode: Union[WorldMode, str] = WorldMode.RAW,
        max_elements: int = DEFAULT_MAX_ELEMENTS,
        eta_id: Optional[str] = DEFAULT_ETA_ID
) -> Iterator[World]:
    """
    Stream the possible worlds of a framework in a deterministic order.

    Raw mode yields exactly 2^N worlds, counting over `world_order`. Induced
    mode counts over the argument assignment first and then over the attacks
    whose endpoints are both present.

    Args:
        praaf: A valid framework
        mode: raw or induced
        max_elements: Largest number of probabilistic elements allowed
        eta_id: Ground-truth id whose attacks are counted present-first, None for none

    Raises:
        CapacityError: If the framework has more than `max_elements` probabilistic elements
    """
    mode = _as_mode(mode)
    n = _check_capacity(praaf, max_elements)
    logger.debug(f"Enumerating {mode.value} worlds over {n} probabilistic elements")
    inverted = ground_truth_attacks(praaf, eta_id)
    if mode == WorldMode.RAW:
        return _raw_worlds(praaf, inverted)
    return _induced_worlds(praaf, inverted)


def is_induced(framework: AAF, praaf: PrAAF) -> bool:
    """Check whether a concrete framework can be induced from the PrAAF."""
    if not framework.args <= praaf.args:
        return False
    if any(
            e not in praaf.atts or e.source not in framework.args or e.target not in framework.args
            for e in framework.atts
    ):
        return False
    if any(praaf.is_certain_argument(a) and a not in framework.args for a in praaf.args):
        return False
    return not any(
        praaf.is_certain_attack(e)
        and praaf.is_certain_argument(e.source)
        and praaf.is_certain_argument(e.target)
        and e not in framework.atts
        for e in praaf.atts
    )


class _ExtensionCache:
    """Extensions per realized framework; many worlds share the same one."""

    def __init__(self, sigma: SemanticsName, max_arguments: int):
        self.sigma = sigma
        self.max_arguments = max_arguments
        self._extensions: Dict[AAF, Set[ArgumentSet]] = {}

    def __call__(self, framework: AAF) -> Set[ArgumentSet]:
        if framework not in self._extensions:
            self._extensions[framework] = enumerate_extensions(framework, self.sigma, self.max_arguments)
        return self._extensions[framework]


def extension_distribution(
        praaf: PrAAF,
        sigma: SemanticsLike = SemanticsName.ADMISSIBLE,
        mode: Union[WorldMode, str] = WorldMode.RAW,
        max_elements: int = DEFAULT_MAX_ELEMENTS,
        max_arguments: int = DEFAULT_MAX_ARGUMENTS
) -> ExtensionDistribution:
    """
    Compute the probability that each argument set is a sigma-extension.

    Each entry sums the probabilities of the worlds in which the set is an
    extension; sums run in enumeration order so results are reproducible.

    Raises:
        CapacityError: If a cap is exceeded
    """
    semantics = _as_semantics(sigma)
    mode = _as_mode(mode)
    extensions_of = _ExtensionCache(semantics, max_arguments)

    totals: Dict[ArgumentSet, Probability] = {}
    worlds = 0
    for world in enumerate_worlds(praaf, mode, max_elements):
        worlds += 1
        for extension in extensions_of(world.realized):
            totals[extension] = totals.get(extension, praaf.zero) + world.probability

    entries = {s: p for s, p in totals.items() if p > 0}
    logger.info(f"Distribution of {len(entries)} {semantics.value} extensions over {worlds} {mode.value} worlds")
    return ExtensionDistribution(entries=entries, sigma=semantics, mode=mode)


def extension_probability(
        members: Union[ArgumentSet, Iterable[str]],
        sigma: SemanticsLike,
        praaf: PrAAF,
        mode: Union[WorldMode, str] = WorldMode.RAW,
        max_elements: int = DEFAULT_MAX_ELEMENTS,
        max_arguments: int = DEFAULT_MAX_ARGUMENTS
) -> Probability:
    """
    Probability that the given set is a sigma-extension.

    Raises:
        DomainError: If a member is not an argument of the framework
        CapacityError: If a cap is exceeded
    """
    s = members if isinstance(members, ArgumentSet) else ArgumentSet.of(members)
    for argument in s:
        if argument not in praaf.args:
            raise DomainError(f"Unknown argument '{argument}'")
    distribution = extension_distribution(praaf, sigma, mode, max_elements, max_arguments)
    return distribution.get(s)


def acceptance_probability(
        argument: str,
        sigma: SemanticsLike,
        stance: Union[Stance, str],
        praaf: PrAAF,
        mode: Union[WorldMode, str] = WorldMode.RAW,
        max_elements: int = DEFAULT_MAX_ELEMENTS,
        max_arguments: int = DEFAULT_MAX_ARGUMENTS
) -> Probability:
    """
    Probability that an argument is credulously or skeptically accepted.

    Worlds without the argument contribute to neither stance. A world without
    any sigma-extension counts as skeptically accepting every present argument.

    Raises:
        DomainError: If the argument is not declared
        CapacityError: If a cap is exceeded
    """
    if argument not in praaf.args:
        raise DomainError(f"Unknown argument '{argument}'")
    semantics = _as_semantics(sigma)
    stance = stance if isinstance(stance, Stance) else Stance.parse(stance)
    extensions_of = _ExtensionCache(semantics, max_arguments)

    total = praaf.zero
    vacuous = 0
    for world in enumerate_worlds(praaf, mode, max_elements):
        if argument not in world.realized.args:
            continue
        extensions = extensions_of(world.realized)
        if stance == Stance.CREDULOUS:
            accepted = any(argument in s for s in extensions)
        else:
            accepted = all(argument in s for s in extensions)
            if not extensions:
                vacuous += 1
        if accepted:
            total += world.probability

    if vacuous:
        logger.warning(
            f"{vacuous} worlds have no {semantics.value} extension; "
            f"they count as skeptically accepting '{argument}'"
        )
    return total


def count_vacuous_worlds(
        praaf: PrAAF,
        sigma: SemanticsLike,
        mode: Union[WorldMode, str] = WorldMode.RAW,
        max_elements: int = DEFAULT_MAX_ELEMENTS,
        max_arguments: int = DEFAULT_MAX_ARGUMENTS
) -> int:
    """Number of worlds whose realized framework has no sigma-extension."""
    extensions_of = _ExtensionCache(_as_semantics(sigma), max_arguments)
    return sum(1 for world in enumerate_worlds(praaf, mode, max_elements) if not extensions_of(world.realized))
