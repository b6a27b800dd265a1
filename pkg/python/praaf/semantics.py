"""
Dung extension semantics computed by exhaustive subset enumeration.
"""
import logging
from typing import Callable, Dict, Iterable, Iterator, List, Set, Union

from praaf.errors import CapacityError, UsageError
from praaf.models import AAF, DEFAULT_MAX_ARGUMENTS, ArgumentSet, SemanticsName

logger = logging.getLogger(__name__)

SemanticsLike = Union[SemanticsName, str]


def _as_semantics(sigma: SemanticsLike) -> SemanticsName:
    if isinstance(sigma, SemanticsName):
        return sigma
    if isinstance(sigma, str):
        return SemanticsName.parse(sigma)
    raise UsageError(f"Unknown semantics {sigma!r}")


def _as_set(members: Union[ArgumentSet, Iterable[str]]) -> ArgumentSet:
    return members if isinstance(members, ArgumentSet) else ArgumentSet.of(members)


def subsets(items: List[str]) -> Iterator[ArgumentSet]:
    """Yield every subset of `items`, one per bitmask of a 2^n counter."""
    for mask in range(1 << len(items)):
        yield ArgumentSet.of(item for j, item in enumerate(items) if mask >> j & 1)


def is_conflict_free(members: Union[ArgumentSet, Iterable[str]], framework: AAF) -> bool:
    """
    Check that no member of the set attacks a member of the set.

    A self-attacking argument is never part of a conflict-free set.

    Raises:
        DomainError: If a member is not an argument of the framework
    """
    s = _as_set(members)
    framework.require_subset(s)
    return not any(edge.source in s and edge.target in s for edge in framework.atts)


def is_acceptable(argument: str, members: Union[ArgumentSet, Iterable[str]], framework: AAF) -> bool:
    """
    Check that the set defends `argument`: each attacker is attacked by some member.

    Raises:
        DomainError: If the argument or a member is unknown
    """
    s = _as_set(members)
    framework.require_subset(s)
    return all(
        any(framework.attacks(defender, attacker) for defender in s)
        for attacker in framework.attackers_of(argument)
    )


def characteristic(members: Union[ArgumentSet, Iterable[str]], framework: AAF) -> ArgumentSet:
    """Return every argument of the framework that the set defends."""
    s = _as_set(members)
    framework.require_subset(s)
    return ArgumentSet.of(a for a in framework.sorted_args if is_acceptable(a, s, framework))


def grounded_extension(framework: AAF) -> ArgumentSet:
    """Least fixed point of the characteristic function, iterated from the empty set."""
    current = ArgumentSet()
    for step in range(len(framework.args) + 1):
        following = characteristic(current, framework)
        if following == current:
            logger.debug(f"Grounded fixed point {current} reached after {step} steps")
            return current
        current = following
    return current


def _is_admissible(s: ArgumentSet, framework: AAF) -> bool:
    return is_conflict_free(s, framework) and all(is_acceptable(a, s, framework) for a in s)


def _is_complete(s: ArgumentSet, framework: AAF) -> bool:
    return _is_admissible(s, framework) and characteristic(s, framework) == s


def _is_stable(s: ArgumentSet, framework: AAF) -> bool:
    if not is_conflict_free(s, framework):
        return False
    attacked = {edge.target for edge in framework.atts if edge.source in s}
    return all(a in attacked for a in framework.args if a not in s)


def _is_preferred(s: ArgumentSet, framework: AAF) -> bool:
    if not _is_admissible(s, framework):
        return False
    outside = [a for a in framework.sorted_args if a not in s]
    return not any(
        _is_admissible(s.union(extra), framework) for extra in subsets(outside) if len(extra)
    )


def _is_grounded(s: ArgumentSet, framework: AAF) -> bool:
    return s == grounded_extension(framework)


_MEMBERSHIP: Dict[SemanticsName, Callable[[ArgumentSet, AAF], bool]] = {
    SemanticsName.CONFLICT_FREE: is_conflict_free,
    SemanticsName.ADMISSIBLE: _is_admissible,
    SemanticsName.COMPLETE: _is_complete,
    SemanticsName.GROUNDED: _is_grounded,
    SemanticsName.PREFERRED: _is_preferred,
    SemanticsName.STABLE: _is_stable
}


def is_extension(members: Union[ArgumentSet, Iterable[str]], sigma: SemanticsLike, framework: AAF) -> bool:
    """
    Check whether a set is a sigma-extension of the framework.

    Raises:
        UsageError: If sigma is not a known semantics
        DomainError: If a member is not an argument of the framework
    """
    semantics = _as_semantics(sigma)
    s = _as_set(members)
    framework.require_subset(s)
    return _MEMBERSHIP[semantics](s, framework)


def enumerate_extensions(
        framework: AAF,
        sigma: SemanticsLike,
        max_arguments: int = DEFAULT_MAX_ARGUMENTS
) -> Set[ArgumentSet]:
    """
    Compute all sigma-extensions of a framework.

    Every subset of the arguments is tested, except for the grounded semantics
    which is computed by fixed-point iteration.

    Args:
        framework: The framework
        sigma: The semantics
        max_arguments: Largest framework that may be enumerated

    Returns:
        Set[ArgumentSet]: The extensions

    Raises:
        CapacityError: If the framework has more than `max_arguments` arguments
        UsageError: If sigma is not a known semantics
    """
    semantics = _as_semantics(sigma)
    if len(framework.args) > max_arguments:
        logger.error(f"Refusing to enumerate extensions over {len(framework.args)} arguments")
        raise CapacityError("arguments", len(framework.args), max_arguments)

    if semantics == SemanticsName.GROUNDED:
        return {grounded_extension(framework)}

    if semantics == SemanticsName.PREFERRED:
        admissible = [s for s in subsets(framework.sorted_args) if _is_admissible(s, framework)]
        extensions = {
            s for s in admissible
            if not any(s.as_frozenset < other.as_frozenset for other in admissible)
        }
    else:
        test = _MEMBERSHIP[semantics]
        extensions = {s for s in subsets(framework.sorted_args) if test(s, framework)}

    logger.debug(f"{len(extensions)} {semantics.value} extensions over {len(framework.args)} arguments")
    return extensions


def sorted_extensions(extensions: Iterable[ArgumentSet]) -> List[ArgumentSet]:
    """List extensions in canonical order (by size, then lexicographically)."""
    return sorted(extensions, key=lambda s: s.sort_key)
