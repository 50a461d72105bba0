"""Chat-style mask prediction: one instruction prompt, a parsed list reply."""

from __future__ import annotations

import logging
import re
from typing import Optional

from ..errors import UnparseableReply
from ..transcript import NULL_TRANSCRIPT, Transcript
from .base import FillCandidate, FillRequest, FillerConfig
from .remote import HttpTransport, MalformedResponse

log = logging.getLogger(__name__)

PROMPT_TEMPLATE = (
    "Next token prediction task, the first line is a comment to help "
    "prediction, just return {beam} possible predictions for {mask_token} "
    "with highest probability: "
)

_LINE_PREFIX = re.compile(r"^\s*(?:\d+[.)]\s*|[-*]\s+)?")


def build_prompt(request: FillRequest) -> str:
    head = PROMPT_TEMPLATE.format(beam=request.beam_size, mask_token=request.mask_token)
    return head + "\n" + request.context_text


def parse_reply(text: str) -> list[str]:
    """Extract an ordered prediction list from a chat reply: one prediction
    per line, numbering/bullets/backticks stripped. Raises UnparseableReply
    when nothing is extractable."""
    fills: list[str] = []
    for raw in text.splitlines():
        line = _LINE_PREFIX.sub("", raw).strip()
        line = line.strip("`")
        if line:
            fills.append(line)
    if not fills:
        raise UnparseableReply("no extractable prediction list in reply")
    return fills


def prompt_fill(
    request: FillRequest,
    config: FillerConfig,
    transcript: Transcript = NULL_TRANSCRIPT,
    deadline: Optional[float] = None,
) -> list[FillCandidate]:
    """Send the instruction prompt plus context; rank order is the only score
    signal, so fills get score = negative rank. An unparseable reply yields
    an empty list (and the raw reply is logged), not a failed run."""
    transport = HttpTransport(config, transcript)
    body = transport.post({"prompt": build_prompt(request)}, deadline=deadline)
    if not isinstance(body, dict) or "text" not in body:
        raise MalformedResponse("chat reply lacks a 'text' field")
    reply = str(body["text"])
    try:
        fills = parse_reply(reply)
    except UnparseableReply:
        log.warning("unparseable chat reply (%d chars); raw reply transcripted", len(reply))
        transcript.record("unparseable_reply", raw=reply)
        return []
    fills = fills[: request.beam_size]
    return [
        FillCandidate(fills=(fill,), score=-float(rank), backend="prompt")
        for rank, fill in enumerate(fills)
    ]
