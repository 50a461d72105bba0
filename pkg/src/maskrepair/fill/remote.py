"""HTTP transport for mask-prediction endpoints.

Wire protocol (span and sequential backends):
    POST <endpoint>  {"context": str, "mask_token": str, "mask_count": int, "beam": int}
    reply            {"candidates": [{"fills": [str, ...], "score": number}, ...]}

Chat backend:
    POST <endpoint>  {"prompt": str}
    reply            {"text": str}

Transport failures surface as FillError subclasses; the pipeline records
them per candidate and keeps the run alive.
"""

from __future__ import annotations

import os
import threading
import time
from typing import Optional

import requests

from ..errors import EndpointUnreachable, FillTimeout, MalformedResponse
from ..transcript import NULL_TRANSCRIPT, Transcript
from .base import FillCandidate, FillRequest, FillerConfig, sort_candidates


class HttpTransport:
    """Small shared POST helper: timeouts, deadline capping, auth header,
    bounded in-flight requests, transcripting."""

    def __init__(self, config: FillerConfig, transcript: Transcript = NULL_TRANSCRIPT):
        if not config.endpoint:
            raise EndpointUnreachable("no endpoint configured")
        self.config = config
        self.transcript = transcript
        self._gate = threading.Semaphore(max(1, config.max_in_flight))

    def post(self, payload: dict, deadline: Optional[float] = None) -> dict:
        timeout = self.config.timeout
        if deadline is not None:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                raise FillTimeout("fill deadline exhausted before request")
            timeout = min(timeout, remaining)
        headers = {}
        token = os.environ.get(self.config.credential_env, "")
        if token:
            headers["Authorization"] = f"Bearer {token}"
        self.transcript.record("fill_request", endpoint=self.config.endpoint, body=payload)
        with self._gate:
            try:
                response = requests.post(
                    self.config.endpoint, json=payload, timeout=timeout, headers=headers
                )
            except requests.Timeout as exc:
                self.transcript.record("fill_error", kind="timeout", detail=str(exc))
                raise FillTimeout(str(exc)) from exc
            except requests.RequestException as exc:
                self.transcript.record("fill_error", kind="unreachable", detail=str(exc))
                raise EndpointUnreachable(str(exc)) from exc
        if response.status_code != 200:
            self.transcript.record(
                "fill_error", kind="http_status", status=response.status_code
            )
            raise MalformedResponse(f"endpoint returned HTTP {response.status_code}")
        try:
            body = response.json()
        except ValueError as exc:
            self.transcript.record("fill_error", kind="bad_json", detail=str(exc))
            raise MalformedResponse(f"non-JSON reply: {exc}") from exc
        self.transcript.record("fill_reply", body=body)
        return body


def strip_sentinels(text: str, sentinels: tuple[str, ...]) -> str:
    for sentinel in sentinels:
        cut = text.find(sentinel)
        if cut != -1:
            text = text[:cut]
    return text.rstrip()


def parse_candidates(body: dict, backend: str, sentinels: tuple[str, ...]) -> list[FillCandidate]:
    if not isinstance(body, dict) or not isinstance(body.get("candidates"), list):
        raise MalformedResponse("reply lacks a 'candidates' list")
    out: list[FillCandidate] = []
    for item in body["candidates"]:
        try:
            fills = tuple(strip_sentinels(str(f), sentinels) for f in item["fills"])
            score = float(item.get("score", 0.0))
        except (TypeError, KeyError, ValueError) as exc:
            raise MalformedResponse(f"malformed candidate entry: {item!r}") from exc
        out.append(FillCandidate(fills=fills, score=score, backend=backend))
    return out


def span_fill(
    request: FillRequest,
    config: FillerConfig,
    transcript: Transcript = NULL_TRANSCRIPT,
    deadline: Optional[float] = None,
) -> list[FillCandidate]:
    """One infilling call: the backend proposes multi-token fragments for the
    single mask; backend ranking is preserved (scores kept non-increasing)."""
    transport = HttpTransport(config, transcript)
    body = transport.post(
        {
            "context": request.context_text,
            "mask_token": request.mask_token,
            "mask_count": request.mask_count,
            "beam": request.beam_size,
        },
        deadline=deadline,
    )
    candidates = parse_candidates(body, "span", config.sentinels)
    bad = [c for c in candidates if len(c.fills) != request.mask_count]
    if bad:
        raise MalformedResponse(
            f"{len(bad)} candidates do not carry {request.mask_count} fill(s)"
        )
    return sort_candidates(candidates)[: request.beam_size]
