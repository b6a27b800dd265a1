"""
Data models for frameworks, worlds and distributions.
"""

from .framework_models import (
    AAF,
    ArgumentSet,
    AttackEdge,
    SemanticsName,
    Stance,
    WorldMode,
    is_argument_id
)
from .praaf_models import (
    DEFAULT_ETA_ID,
    DEFAULT_MAX_ARGUMENTS,
    DEFAULT_MAX_ELEMENTS,
    DEFAULT_TOLERANCE,
    ElementKind,
    ExtensionDistribution,
    GroundTruth,
    MappingEntry,
    NormalFormCertificate,
    PrAAF,
    Probability,
    ProbabilisticElement,
    World,
    complement,
    format_probability,
    to_probability
)
