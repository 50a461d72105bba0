"""Sequential single-token filling with left-to-right beam search.

For backends that predict exactly one token per mask, the single template
mask is expanded into k successive masks for every k in the configured range
(1..20 by default). Each step requests per-token candidates conditioned on
the tokens already chosen; hypotheses are ranked by joint score, the sum of
per-token log-scores, and the beams for all k are merged into one ranking.
"""

from __future__ import annotations

import time
from typing import Callable, Optional

from ..errors import FillTimeout
from ..transcript import NULL_TRANSCRIPT, Transcript
from .base import FillCandidate, FillRequest, FillerConfig
from .remote import HttpTransport, MalformedResponse, strip_sentinels

#: predict(context, prefix_tokens, beam) -> [(token, log_score), ...]
TokenPredictor = Callable[[str, tuple[str, ...], int], list[tuple[str, float]]]


def expand_masks(request: FillRequest, prefix: tuple[str, ...], remaining: int) -> str:
    """Context with the template mask replaced by chosen tokens plus the
    still-unfilled run of masks."""
    replacement = "".join(prefix) + request.mask_token * remaining
    return request.context_text.replace(request.mask_token, replacement, 1)


class HttpTokenPredictor:
    """Adapter speaking the shared wire protocol, one token per candidate."""

    def __init__(
        self,
        config: FillerConfig,
        mask_token: str,
        transcript: Transcript = NULL_TRANSCRIPT,
        deadline: Optional[float] = None,
    ):
        self.config = config
        self.mask_token = mask_token
        self.transport = HttpTransport(config, transcript)
        self.deadline = deadline

    def __call__(self, context: str, prefix: tuple[str, ...], beam: int):
        body = self.transport.post(
            {
                "context": context,
                "mask_token": self.mask_token,
                "mask_count": context.count(self.mask_token),
                "beam": beam,
            },
            deadline=self.deadline,
        )
        out = []
        for item in body.get("candidates", []):
            try:
                fills = item["fills"]
                token = strip_sentinels(str(fills[0]), self.config.sentinels)
                out.append((token, float(item.get("score", 0.0))))
            except (TypeError, KeyError, IndexError, ValueError) as exc:
                raise MalformedResponse(f"malformed token candidate: {item!r}") from exc
        return out


def sequential_fill(
    request: FillRequest,
    config: FillerConfig,
    predictor: Optional[TokenPredictor] = None,
    transcript: Transcript = NULL_TRANSCRIPT,
    deadline: Optional[float] = None,
) -> list[FillCandidate]:
    """Beam-search k-token fills for every k in the configured mask range and
    merge them into one ranking by joint score."""
    if predictor is None:
        predictor = HttpTokenPredictor(config, request.mask_token, transcript, deadline)

    merged: list[tuple[float, int, int, str]] = []  # (-score, k, order, fill)
    order = 0
    for k in range(config.mask_count_low, config.mask_count_high + 1):
        if deadline is not None and time.monotonic() >= deadline:
            raise FillTimeout("fill deadline exhausted during beam search")
        beam: list[tuple[tuple[str, ...], float]] = [((), 0.0)]
        for step in range(k):
            extensions: list[tuple[tuple[str, ...], float]] = []
            for prefix, score in beam:
                context = expand_masks(request, prefix, k - len(prefix))
                for token, token_score in predictor(context, prefix, request.beam_size):
                    extensions.append((prefix + (token,), score + token_score))
            extensions.sort(key=lambda e: -e[1])
            beam = extensions[: request.beam_size]
            if not beam:
                break
        for prefix, score in beam:
            merged.append((-score, k, order, "".join(prefix)))
            order += 1

    merged.sort()
    return [
        FillCandidate(fills=(fill,), score=-neg_score, backend="sequential")
        for neg_score, _k, _order, fill in merged[: request.beam_size]
    ]
