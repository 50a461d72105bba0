"""Contracts between the repair pipeline and mask-prediction backends."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Protocol

from .. import MASK_TOKEN


@dataclass(frozen=True)
class FillRequest:
    context_text: str
    masked_line: str
    mask_count: int
    beam_size: int
    mask_token: str = MASK_TOKEN

    def __post_init__(self) -> None:
        if self.beam_size < 1:
            raise ValueError("beam_size must be >= 1")
        if self.mask_count < 1:
            raise ValueError("mask_count must be >= 1")
        if self.masked_line not in self.context_text:
            raise ValueError("masked_line must occur verbatim inside context_text")


@dataclass(frozen=True)
class FillCandidate:
    fills: tuple[str, ...]
    score: float
    backend: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "fills", tuple(self.fills))


@dataclass
class FillerConfig:
    backend: str = "donor"
    endpoint: Optional[str] = None
    timeout: float = 30.0
    max_in_flight: int = 4
    #: sequential backend: expand one template mask into low..high masks
    mask_count_low: int = 1
    mask_count_high: int = 20
    #: end-of-fill sentinels stripped from remote fills
    sentinels: tuple[str, ...] = ("</s>", "<eos>", "<EOF>")
    #: bearer token read from this environment variable, if set there
    credential_env: str = "MASKREPAIR_TOKEN"

    def __post_init__(self) -> None:
        if self.mask_count_low < 1:
            raise ValueError("mask_count_low must be >= 1")
        if self.mask_count_high < self.mask_count_low:
            raise ValueError("mask_count_high must be >= mask_count_low")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")


def rank_scores(count: int) -> list[float]:
    """Scores for rank-only backends: negative rank, non-increasing."""
    return [-float(i) for i in range(count)]


def sort_candidates(candidates: list[FillCandidate]) -> list[FillCandidate]:
    """Stable order by descending score so output ranking is monotonic."""
    return sorted(candidates, key=lambda c: -c.score)


class SupportsFill(Protocol):
    """What the pipeline needs from any backend adapter."""

    name: str

    def fill(self, request: FillRequest, candidate, unit, *, transcript=None, deadline=None):
        ...
