"""Drive generate -> validate under a budget and assemble the report.

Validation may run on several worker threads (each in its own workdir); the
report is assembled strictly in candidate rank order, so parallelism never
changes what a run reports.
"""

from __future__ import annotations

import shutil
import tempfile
import time
from collections import deque
from concurrent.futures import Future, ThreadPoolExecutor
from pathlib import Path
from typing import Optional

from ..errors import RepairError, WorkdirSetupFailed
from ..syntax import parse
from ..templates import TemplateOrder
from ..transcript import Transcript
from .generate import GenerateStats, generate
from .model import BugInstance, CandidateRecord, PatchCandidate, RepairReport, RunBudget
from .validate import setup_workdir, validate


def repair(
    bug: BugInstance,
    budget: RunBudget,
    filler,
    out_dir: Optional[Path] = None,
    order: Optional[TemplateOrder] = None,
    validation_workers: int = 1,
) -> RepairReport:
    started = time.monotonic()
    deadline = started + budget.wall_clock_limit
    transcript_path = Path(out_dir) / f"{bug.id}.transcript.jsonl" if out_dir else None
    transcript = Transcript(transcript_path)
    report = RepairReport(
        bug_id=bug.id,
        transcript_path=str(transcript_path) if transcript_path else "",
    )

    try:
        source = bug.source_file.read_text()
        unit = parse(source, language=bug.language)
    except (OSError, RepairError, ValueError) as exc:
        report.status = "setup-error"
        report.error = f"{type(exc).__name__}: {exc}"
        report.elapsed_seconds = time.monotonic() - started
        return report

    stats = GenerateStats()
    stream = generate(
        bug,
        budget,
        filler,
        unit=unit,
        order=order,
        transcript=transcript,
        deadline=deadline,
        stats=stats,
    )

    scratch = Path(tempfile.mkdtemp(prefix=f"maskrepair-{bug.id}-"))
    workers = max(1, validation_workers)
    pending: deque[tuple[PatchCandidate, Future]] = deque()
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None

    def run_validation(candidate: PatchCandidate):
        workdir = scratch / f"cand-{candidate.global_rank}"
        try:
            setup_workdir(bug, candidate, workdir)
            outcome = validate(
                candidate, bug, workdir, timeout=min(budget.command_timeout, budget.wall_clock_limit)
            )
        finally:
            shutil.rmtree(workdir, ignore_errors=True)
        return outcome

    def record(candidate: PatchCandidate, outcome) -> bool:
        """Append one outcome; True means stop the run."""
        transcript.record(
            "validation",
            rank=candidate.global_rank,
            template=candidate.origin[0],
            backend=candidate.origin[1],
            fill_rank=candidate.origin[2],
            status=outcome.status,
        )
        report.records.append(
            CandidateRecord(
                rank=candidate.global_rank,
                origin=candidate.origin,
                outcome=outcome,
                diff=candidate.diff,
            )
        )
        if budget.stop_on_first_plausible and outcome.is_plausible:
            report.stopped_early = True
            return True
        return False

    stop = False
    try:
        for candidate in stream:
            report.generated += 1
            if time.monotonic() >= deadline:
                report.budget_exhausted = True
                break
            if report.generated > budget.max_candidates:
                report.budget_exhausted = True
                break
            if pool is None:
                try:
                    outcome = run_validation(candidate)
                except WorkdirSetupFailed as exc:
                    report.status = "setup-error"
                    report.error = str(exc)
                    break
                if record(candidate, outcome):
                    break
            else:
                pending.append((candidate, pool.submit(run_validation, candidate)))
                while len(pending) >= workers:
                    stop = _drain_one(pending, record, report)
                    if stop:
                        break
                if stop:
                    break
        while not stop and pending:
            stop = _drain_one(pending, record, report)
    finally:
        if pool is not None:
            for _cand, fut in pending:
                fut.cancel()
            pool.shutdown(wait=True)
        shutil.rmtree(scratch, ignore_errors=True)

    if time.monotonic() >= deadline and not report.found_plausible:
        report.budget_exhausted = True
    if report.stopped_early and report.records:
        # workers may have pulled the generator past the stopping point;
        # report the deterministic prefix the stop rule actually covers
        report.generated = report.records[-1].rank + 1
    report.fill_errors = stats.fill_errors
    report.elapsed_seconds = time.monotonic() - started
    transcript.record("report", counts=report.counts, status=report.status)
    return report


def _drain_one(pending, record, report) -> bool:
    candidate, future = pending.popleft()
    try:
        outcome = future.result()
    except WorkdirSetupFailed as exc:
        report.status = "setup-error"
        report.error = str(exc)
        return True
    return record(candidate, outcome)


def exit_code(report: RepairReport) -> int:
    """0 = plausible found, 1 = none found, 2 = setup error."""
    if report.status != "ok":
        return 2
    return 0 if report.found_plausible else 1
