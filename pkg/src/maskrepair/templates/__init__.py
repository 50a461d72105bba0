"""Fix-template catalog and the matching/instantiation engine."""

from .catalog import (
    CATALOG,
    DEFAULT_MAJOR_ORDER,
    DESCRIPTIONS,
    TemplateId,
    TemplateOrder,
    UNIVERSAL_MAJORS,
)
from .engine import (
    EditKind,
    MaskedCandidate,
    MatchSite,
    instantiate,
    select_templates,
)

__all__ = [
    "CATALOG",
    "DEFAULT_MAJOR_ORDER",
    "DESCRIPTIONS",
    "EditKind",
    "MaskedCandidate",
    "MatchSite",
    "TemplateId",
    "TemplateOrder",
    "UNIVERSAL_MAJORS",
    "instantiate",
    "select_templates",
]
