"""Candidate generation: templates -> masked edits -> filled patches.

Candidates stream out in deterministic order: buggy lines ascending, then
template priority, then matched-node document order, then fill rank.
Byte-identical duplicates and no-op patches are dropped as they appear.
"""

from __future__ import annotations

from typing import Iterator, Optional

from ..errors import FillError, NoStatementAtLine, NotApplicable, RepairError
from ..fill import FillRequest, build_context
from ..syntax import ParsedUnit, parse, statement_at
from ..templates import MaskedCandidate, TemplateOrder, instantiate, select_templates
from ..transcript import NULL_TRANSCRIPT, Transcript
from .diffs import unified_diff
from .model import BugInstance, PatchCandidate, RunBudget


def splice_fills(candidate: MaskedCandidate, fills: tuple[str, ...]) -> str:
    """Substitute one fill per mask occurrence, left to right."""
    parts = candidate.patched_unit_text.split(candidate.mask_token)
    if len(parts) != len(fills) + 1:
        raise ValueError("fill count does not match mask count")
    out = [parts[0]]
    for fill, tail in zip(fills, parts[1:]):
        out.append(fill)
        out.append(tail)
    return "".join(out)


def contiguous_runs(lines: list[int]) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for line in sorted(set(lines)):
        if runs and line == runs[-1][1] + 1:
            runs[-1] = (runs[-1][0], line)
        else:
            runs.append((line, line))
    return runs


class GenerateStats:
    def __init__(self) -> None:
        self.fill_errors = 0


def generate(
    bug: BugInstance,
    budget: RunBudget,
    filler,
    unit: Optional[ParsedUnit] = None,
    order: Optional[TemplateOrder] = None,
    transcript: Transcript = NULL_TRANSCRIPT,
    deadline: Optional[float] = None,
    stats: Optional[GenerateStats] = None,
) -> Iterator[PatchCandidate]:
    if unit is None:
        unit = parse(bug.source_file.read_text(), language=bug.language)
    original = unit.source
    if unit.source.count("<mask>"):
        raise RepairError("source already contains the mask literal")
    order = order or TemplateOrder.default()
    stats = stats or GenerateStats()

    seen: set[str] = set()
    rank = 0

    def emit(masked: MaskedCandidate, patched: str, backend: str, fill_rank: int, score: float):
        nonlocal rank
        if patched == original or patched in seen:
            return None
        seen.add(patched)
        candidate = PatchCandidate(
            patched_source=patched,
            diff=unified_diff(original, patched, str(bug.relative_source)),
            origin=(str(masked.template), backend, fill_rank),
            score=score,
            global_rank=rank,
            masked_line=masked.masked_line_text,
        )
        rank += 1
        return candidate

    for line in sorted(set(bug.buggy_lines)):
        try:
            sites = select_templates(unit, line, order)
        except NoStatementAtLine as exc:
            transcript.record("no_statement", line=line, detail=str(exc))
            continue
        for site in sites:
            try:
                masked_candidates = instantiate(site, unit)
            except NotApplicable:
                continue
            for masked in masked_candidates:
                if masked.mask_count == 0:
                    candidate = emit(masked, masked.patched_unit_text, "complete", 0, 0.0)
                    if candidate:
                        yield candidate
                    continue
                request = FillRequest(
                    context_text=build_context(
                        unit, line, masked.masked_line_text, masked.replace_range
                    ),
                    masked_line=masked.masked_line_text,
                    mask_count=masked.mask_count,
                    beam_size=budget.beam_size,
                )
                try:
                    fills = filler.fill(
                        request, masked, unit, transcript=transcript, deadline=deadline
                    )
                except FillError as exc:
                    stats.fill_errors += 1
                    transcript.record(
                        "fill_skipped",
                        template=str(masked.template),
                        line=line,
                        error=type(exc).__name__,
                        detail=str(exc),
                    )
                    continue
                for fill_rank, fill in enumerate(fills):
                    if len(fill.fills) != masked.mask_count:
                        continue
                    candidate = emit(
                        masked,
                        splice_fills(masked, fill.fills),
                        fill.backend,
                        fill_rank,
                        fill.score,
                    )
                    if candidate:
                        yield candidate

    # contiguous multi-line hunks are also treated as one removal unit
    for first, last in contiguous_runs(bug.buggy_lines):
        if last == first:
            continue
        patched = _delete_lines(unit, first, last)
        if patched is not None:
            masked = _hunk_masked_stub(unit, first, last)
            candidate = emit(masked, patched, "complete", 0, 0.0)
            if candidate:
                yield candidate


def _delete_lines(unit: ParsedUnit, first: int, last: int) -> Optional[str]:
    try:
        statement_at(unit, first)
    except NoStatementAtLine:
        return None
    start = unit.line_starts[first - 1]
    _, end = unit.line_span(last)
    if end < len(unit.source) and unit.source[end] == "\n":
        end += 1
    return unit.source[:start] + unit.source[end:]


def _hunk_masked_stub(unit: ParsedUnit, first: int, last: int) -> MaskedCandidate:
    from ..templates.catalog import TemplateId
    from ..templates.engine import EditKind

    return MaskedCandidate(
        template=TemplateId("T11"),
        edit_kind=EditKind.DELETE,
        masked_line_text="",
        mask_count=0,
        patched_unit_text="",
        regions=((first, last),),
        replace_range=(first, last),
    )
