"""Mask-prediction backends and the adapters the pipeline drives them with.

Backends are interchangeable: each consumes a FillRequest and returns ranked
FillCandidates. Swapping backends changes nothing upstream or downstream.
"""

from __future__ import annotations

from typing import Optional

from ..errors import RepairError
from ..syntax import ParsedUnit
from ..transcript import NULL_TRANSCRIPT
from .base import FillCandidate, FillRequest, FillerConfig
from .context import build_context
from .donor import DonorPool, build_pool, donor_fill
from .oracle import OracleFiller, derive_fill
from .prompt import build_prompt, parse_reply, prompt_fill
from .remote import span_fill
from .sequential import HttpTokenPredictor, expand_masks, sequential_fill


class DonorFiller:
    """Local-file donor retrieval; pure, no network."""

    name = "donor"

    def __init__(self):
        self._pools: dict[int, DonorPool] = {}

    def fill(self, request, candidate, unit: ParsedUnit, *, transcript=None, deadline=None):
        pool = self._pools.get(id(unit))
        if pool is None:
            pool = build_pool(unit)
            self._pools[id(unit)] = pool
        return donor_fill(request, pool, candidate.site)


class SpanFiller:
    name = "span"

    def __init__(self, config: FillerConfig):
        self.config = config

    def fill(self, request, candidate, unit, *, transcript=None, deadline=None):
        return span_fill(request, self.config, transcript or NULL_TRANSCRIPT, deadline)


class SequentialFiller:
    name = "sequential"

    def __init__(self, config: FillerConfig, predictor=None):
        self.config = config
        self.predictor = predictor

    def fill(self, request, candidate, unit, *, transcript=None, deadline=None):
        return sequential_fill(
            request,
            self.config,
            predictor=self.predictor,
            transcript=transcript or NULL_TRANSCRIPT,
            deadline=deadline,
        )


class PromptFiller:
    name = "prompt"

    def __init__(self, config: FillerConfig):
        self.config = config

    def fill(self, request, candidate, unit, *, transcript=None, deadline=None):
        return prompt_fill(request, self.config, transcript or NULL_TRANSCRIPT, deadline)


def make_filler(config: FillerConfig, reference_text: Optional[str] = None):
    """Build the backend named by ``config.backend``."""
    if config.backend == "donor":
        return DonorFiller()
    if config.backend == "span":
        return SpanFiller(config)
    if config.backend == "sequential":
        return SequentialFiller(config)
    if config.backend == "prompt":
        return PromptFiller(config)
    if config.backend == "oracle":
        if reference_text is None:
            raise RepairError("oracle backend needs a reference patch")
        return OracleFiller(reference_text)
    raise RepairError(f"unknown filler backend: {config.backend!r}")


__all__ = [
    "DonorFiller",
    "DonorPool",
    "FillCandidate",
    "FillRequest",
    "FillerConfig",
    "HttpTokenPredictor",
    "OracleFiller",
    "PromptFiller",
    "SequentialFiller",
    "SpanFiller",
    "build_context",
    "build_pool",
    "build_prompt",
    "derive_fill",
    "donor_fill",
    "expand_masks",
    "make_filler",
    "parse_reply",
    "prompt_fill",
    "sequential_fill",
    "span_fill",
]
