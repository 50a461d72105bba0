"""Repair-task domain objects: bugs, budgets, candidates, outcomes, reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional


@dataclass
class BugInstance:
    """One repair task: where the bug is and how to build/test the project."""

    id: str
    source_file: Path
    buggy_lines: list[int]
    build_command: str
    test_command: str
    reference_patch: Optional[Path] = None
    language: str = "java"
    project_root: Optional[Path] = None

    def __post_init__(self) -> None:
        self.source_file = Path(self.source_file)
        if not self.buggy_lines:
            raise ValueError("buggy_lines must be non-empty")
        if not self.build_command.strip() or not self.test_command.strip():
            raise ValueError("build and test commands must be non-empty")
        if self.project_root is None:
            self.project_root = self.source_file.parent
        self.project_root = Path(self.project_root)
        if self.reference_patch is not None:
            self.reference_patch = Path(self.reference_patch)

    @property
    def relative_source(self) -> Path:
        return self.source_file.resolve().relative_to(self.project_root.resolve())


@dataclass
class RunBudget:
    beam_size: int = 250
    wall_clock_limit: float = 18000.0  # seconds per bug
    max_candidates: int = 100000
    stop_on_first_plausible: bool = True
    command_timeout: float = 300.0  # per build/test invocation

    def __post_init__(self) -> None:
        if min(self.beam_size, self.max_candidates) < 1:
            raise ValueError("beam_size and max_candidates must be positive")
        if self.wall_clock_limit <= 0 or self.command_timeout <= 0:
            raise ValueError("time budgets must be positive")


@dataclass(frozen=True)
class PatchCandidate:
    patched_source: str
    diff: str
    origin: tuple[str, str, int]  # (template id, backend, fill rank)
    score: float
    global_rank: int
    masked_line: str = ""


@dataclass(frozen=True)
class ValidationOutcome:
    status: str  # CompileError | TestsFailed | Plausible | ReferenceEquivalent
    log_excerpt: str = ""
    failing_tests: tuple[str, ...] = ()
    timed_out: bool = False

    @classmethod
    def compile_error(cls, log: str) -> "ValidationOutcome":
        return cls(status="CompileError", log_excerpt=log[-2000:])

    @classmethod
    def tests_failed(cls, names: tuple[str, ...], log: str, timed_out: bool = False) -> "ValidationOutcome":
        return cls(
            status="TestsFailed",
            failing_tests=names,
            log_excerpt=log[-2000:],
            timed_out=timed_out,
        )

    @classmethod
    def plausible(cls) -> "ValidationOutcome":
        return cls(status="Plausible")

    @classmethod
    def reference_equivalent(cls) -> "ValidationOutcome":
        return cls(status="ReferenceEquivalent")

    @property
    def is_plausible(self) -> bool:
        # ReferenceEquivalent implies Plausible
        return self.status in ("Plausible", "ReferenceEquivalent")


@dataclass
class CandidateRecord:
    rank: int
    origin: tuple[str, str, int]
    outcome: ValidationOutcome
    diff: str

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "template": self.origin[0],
            "backend": self.origin[1],
            "fill_rank": self.origin[2],
            "status": self.outcome.status,
            "failing_tests": list(self.outcome.failing_tests),
            "timed_out": self.outcome.timed_out,
            "diff": self.diff,
        }


@dataclass
class RepairReport:
    bug_id: str
    status: str = "ok"  # ok | setup-error
    records: list[CandidateRecord] = field(default_factory=list)
    generated: int = 0
    budget_exhausted: bool = False
    stopped_early: bool = False
    fill_errors: int = 0
    elapsed_seconds: float = 0.0
    transcript_path: str = ""
    error: str = ""

    @property
    def counts(self) -> dict[str, int]:
        compiled = sum(1 for r in self.records if r.outcome.status != "CompileError")
        plausible = sum(1 for r in self.records if r.outcome.is_plausible)
        reference = sum(1 for r in self.records if r.outcome.status == "ReferenceEquivalent")
        return {
            "generated": self.generated,
            "validated": len(self.records),
            "compiled": compiled,
            "plausible": plausible,
            "reference_equivalent": reference,
        }

    @property
    def found_plausible(self) -> bool:
        return any(r.outcome.is_plausible for r in self.records)

    def to_dict(self) -> dict:
        # volatile values (timings, absolute paths) are kept in a separate
        # key so reports stay byte-comparable across runs
        return {
            "schema": "maskrepair-report/1",
            "bug_id": self.bug_id,
            "status": self.status,
            "counts": self.counts,
            "budget_exhausted": self.budget_exhausted,
            "stopped_early": self.stopped_early,
            "fill_errors": self.fill_errors,
            "error": self.error,
            "candidates": [r.to_dict() for r in self.records],
            "volatile": {
                "elapsed_seconds": self.elapsed_seconds,
                "transcript_path": self.transcript_path,
            },
        }
