"""
Probabilistic attack normal form.

A framework is in normal form when none of its arguments is probabilistic.
Any framework can be brought into normal form by adding a ground-truth
argument eta and replacing each probabilistic argument a (probability p) by a
certain argument attacked from eta with probability 1 - p. Extensions of the
transformed framework are only acceptable when they contain eta; with eta
stripped they have the same distribution as the original extensions.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Set, Union

from praaf.constellation import extension_distribution, validate
from praaf.errors import ConfigurationError, DomainError, NormalFormError, ValidationError
from praaf.models import (
    AAF,
    DEFAULT_MAX_ARGUMENTS,
    DEFAULT_MAX_ELEMENTS,
    DEFAULT_TOLERANCE,
    ArgumentSet,
    AttackEdge,
    ExtensionDistribution,
    GroundTruth,
    MappingEntry,
    NormalFormCertificate,
    PrAAF,
    Probability,
    SemanticsName,
    World,
    WorldMode,
    complement
)
from praaf.semantics import SemanticsLike, _as_semantics, enumerate_extensions

logger = logging.getLogger(__name__)


def _require_valid(praaf: PrAAF) -> None:
    violations = validate(praaf)
    if violations:
        raise ValidationError(violations)


def is_normal_form(praaf: PrAAF) -> bool:
    """True iff every argument is certain."""
    return all(praaf.is_certain_argument(a) for a in praaf.args)


def to_normal_form(praaf: PrAAF, eta: Optional[GroundTruth] = None) -> NormalFormCertificate:
    """
    Move every argument probability onto an attack from the ground truth.

    Args:
        praaf: A valid framework without an argument named after eta
        eta: The ground truth (defaults to "eta")

    Returns:
        NormalFormCertificate: The transformed framework with its mapping

    Raises:
        ValidationError: If the input is invalid
        ConfigurationError: If an argument already uses the ground-truth id, or a float
            argument probability is too small to complement
        NormalFormError: If the transformation does not grow the framework as expected
    """
    eta = eta or GroundTruth()
    _require_valid(praaf)
    if eta.eta_id in praaf.args:
        error = (
            f"Argument '{eta.eta_id}' collides with the ground-truth id; "
            f"rename the argument or pick another id with --eta"
        )
        logger.error(error)
        raise ConfigurationError(error)

    probabilistic = praaf.probabilistic_arguments
    if not probabilistic:
        logger.info("No probabilistic arguments, the framework is already in normal form")
        return NormalFormCertificate(original=praaf, transformed=praaf, eta=eta)

    one = praaf.one
    p_args = {a: one for a in praaf.args}
    p_args[eta.eta_id] = one
    p_atts = dict(praaf.p_atts)
    mapping: List[MappingEntry] = []
    for argument in probabilistic:
        p = praaf.p_args[argument]
        attack = AttackEdge(eta.eta_id, argument)
        p_atts[attack] = complement(p)
        if p_atts[attack] == 1:
            error = (
                f"Probability {p!r} of '{argument}' is too small for its complement to stay below 1 "
                f"as a float; rerun with --exact"
            )
            logger.error(error)
            raise ConfigurationError(error)
        mapping.append(MappingEntry(argument=argument, original_p=p, attack=attack, attack_p=p_atts[attack]))
        logger.debug(f"{argument} ({p}) becomes {attack} ({p_atts[attack]})")

    transformed = PrAAF(args=frozenset(p_args), p_args=p_args, atts=frozenset(p_atts), p_atts=p_atts)
    certificate = NormalFormCertificate(original=praaf, transformed=transformed, eta=eta, mapping=tuple(mapping))

    if certificate.added_arguments != 1 or certificate.added_attacks != len(probabilistic):
        error = (
            f"Transformation added {certificate.added_arguments} arguments and "
            f"{certificate.added_attacks} attacks, expected 1 and {len(probabilistic)}"
        )
        logger.error(error)
        raise NormalFormError(error)

    logger.info(f"Moved {len(mapping)} argument probabilities onto attacks from '{eta.eta_id}'")
    return certificate


def from_normal_form(praaf: PrAAF, eta: Optional[GroundTruth] = None) -> PrAAF:
    """
    Undo `to_normal_form`: each attack eta -> a with probability q becomes P(a) = 1 - q.

    Raises:
        NormalFormError: If the framework is not a normal form over eta, eta is
            attacked, or an attack from eta is certain
    """
    eta = eta or GroundTruth()
    _require_valid(praaf)
    if not is_normal_form(praaf):
        raise NormalFormError("Framework has probabilistic arguments and is not in normal form")
    if eta.eta_id not in praaf.args:
        raise NormalFormError(f"Ground truth '{eta.eta_id}' not found")

    attackers = sorted(e.source for e in praaf.atts if e.target == eta.eta_id)
    if attackers:
        raise NormalFormError(f"Ground truth '{eta.eta_id}' is attacked by {', '.join(attackers)}")

    p_args = {a: p for a, p in praaf.p_args.items() if a != eta.eta_id}
    p_atts = {e: p for e, p in praaf.p_atts.items() if e.source != eta.eta_id}
    for edge in sorted(e for e in praaf.atts if e.source == eta.eta_id):
        q = praaf.p_atts[edge]
        if q == 1:
            raise NormalFormError(
                f"Attack {edge} is certain, which would give '{edge.target}' probability 0"
            )
        p_args[edge.target] = complement(q)

    restored = PrAAF(args=frozenset(p_args), p_args=p_args, atts=frozenset(p_atts), p_atts=p_atts)
    logger.info(f"Restored {len(praaf.atts) - len(p_atts)} probabilistic arguments")
    return restored


def is_acceptable_extension(members: Union[ArgumentSet, Iterable[str]], framework: AAF, eta: GroundTruth) -> bool:
    """An extension of a framework containing eta is acceptable iff it contains eta."""
    if eta.eta_id not in framework.args:
        raise DomainError(f"Ground truth '{eta.eta_id}' is not an argument of the framework")
    return eta.eta_id in members


def acceptable_extensions(
        framework: AAF,
        sigma: SemanticsLike,
        eta: GroundTruth,
        max_arguments: int = DEFAULT_MAX_ARGUMENTS
) -> Set[ArgumentSet]:
    """
    The sigma-extensions of the framework that contain eta.

    Raises:
        DomainError: If eta is not an argument of the framework
    """
    if eta.eta_id not in framework.args:
        raise DomainError(f"Ground truth '{eta.eta_id}' is not an argument of the framework")
    return {
        s for s in enumerate_extensions(framework, sigma, max_arguments)
        if is_acceptable_extension(s, framework, eta)
    }


def strip_eta(distribution: ExtensionDistribution, eta: GroundTruth) -> ExtensionDistribution:
    """Keep the acceptable entries only and drop eta from their keys."""
    entries = {
        s.without(eta.eta_id): p
        for s, p in distribution.entries.items()
        if eta.eta_id in s
    }
    return ExtensionDistribution(entries=entries, sigma=distribution.sigma, mode=distribution.mode)


def translate_assignment(world: World, eta: GroundTruth) -> List[str]:
    """
    Literals of the equivalent world of the original framework.

    A present attack eta -> a reads as `!a`, an absent one as `a`.
    """
    literals = [
        element.literal(present) for element, present in world.assignment
        if element.is_argument or element.ref.source != eta.eta_id
    ]
    restored = sorted(
        (element.ref.target, not present) for element, present in world.assignment
        if not element.is_argument and element.ref.source == eta.eta_id
    )
    literals.extend(target if present else f"!{target}" for target, present in restored)
    return literals


@dataclass(frozen=True)
class Discrepancy:
    """An extension whose probability differs between the two frameworks"""
    extension: ArgumentSet
    original: Probability
    transformed: Probability


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of comparing two extension distributions"""
    sigma: SemanticsName
    mode: WorldMode
    tolerance: float
    compared: int
    discrepancies: List[Discrepancy] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.discrepancies

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"


def check_equivalence(
        original: PrAAF,
        transformed: PrAAF,
        eta: Optional[GroundTruth] = None,
        sigma: SemanticsLike = SemanticsName.ADMISSIBLE,
        tol: float = DEFAULT_TOLERANCE,
        mode: Union[WorldMode, str] = WorldMode.RAW,
        max_elements: int = DEFAULT_MAX_ELEMENTS,
        max_arguments: int = DEFAULT_MAX_ARGUMENTS
) -> EquivalenceReport:
    """
    Compare the extension distribution of `original` with the eta-stripped one of `transformed`.

    The check passes iff both distributions have the same extensions and every
    probability agrees within `tol`.

    Raises:
        ValidationError: If either framework is invalid
        NormalFormError: If eta is not an argument of `transformed`
        CapacityError: If a cap is exceeded
    """
    eta = eta or GroundTruth()
    semantics = _as_semantics(sigma)
    _require_valid(original)
    _require_valid(transformed)
    if eta.eta_id not in transformed.args:
        raise NormalFormError(f"Ground truth '{eta.eta_id}' not found in the transformed framework")

    left = extension_distribution(original, semantics, mode, max_elements, max_arguments)
    right = strip_eta(extension_distribution(transformed, semantics, mode, max_elements, max_arguments), eta)

    keys = sorted(set(left.entries) | set(right.entries), key=lambda s: s.sort_key)
    discrepancies = [
        Discrepancy(extension=s, original=left.get(s), transformed=right.get(s))
        for s in keys
        if s not in left.entries or s not in right.entries or abs(left.get(s) - right.get(s)) > tol
    ]
    report = EquivalenceReport(
        sigma=semantics,
        mode=left.mode,
        tolerance=tol,
        compared=len(keys),
        discrepancies=discrepancies
    )
    if report.passed:
        logger.info(f"Equivalence holds for {len(keys)} {semantics.value} extensions")
    else:
        logger.warning(f"Equivalence fails on {len(discrepancies)} of {len(keys)} {semantics.value} extensions")
    return report
