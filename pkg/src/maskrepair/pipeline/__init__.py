"""Repair orchestration: generation, validation, budgets, reports."""

from .diffs import apply_unified_diff, normalized_tokens, tokens_equal, unified_diff
from .generate import contiguous_runs, generate, splice_fills
from .model import (
    BugInstance,
    CandidateRecord,
    PatchCandidate,
    RepairReport,
    RunBudget,
    ValidationOutcome,
)
from .repair import exit_code, repair
from .validate import parse_failing_tests, setup_workdir, validate

__all__ = [
    "BugInstance",
    "CandidateRecord",
    "PatchCandidate",
    "RepairReport",
    "RunBudget",
    "ValidationOutcome",
    "apply_unified_diff",
    "contiguous_runs",
    "exit_code",
    "generate",
    "normalized_tokens",
    "parse_failing_tests",
    "repair",
    "setup_workdir",
    "splice_fills",
    "tokens_equal",
    "unified_diff",
    "validate",
]
