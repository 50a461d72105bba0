"""Patch validation: apply, build, test, classify; all inside throwaway
copies of the project so concurrent validations never interfere."""

from __future__ import annotations

import re
import shutil
import subprocess
from pathlib import Path

from ..errors import WorkdirSetupFailed
from .diffs import tokens_equal
from .model import BugInstance, PatchCandidate, ValidationOutcome

_FAIL_LINE = re.compile(r"^\s*FAIL(?:ED)?[:\s]+(\S+)", re.MULTILINE)


def setup_workdir(bug: BugInstance, candidate: PatchCandidate, dest: Path) -> Path:
    """Copy the pristine project to ``dest`` and apply the candidate."""
    try:
        shutil.copytree(bug.project_root, dest, symlinks=True)
        target = dest / bug.relative_source
        target.write_text(candidate.patched_source)
    except OSError as exc:
        raise WorkdirSetupFailed(f"could not stage workdir at {dest}: {exc}") from exc
    return dest


def _run(command: str, cwd: Path, timeout: float) -> tuple[int, str, bool]:
    try:
        proc = subprocess.run(
            command,
            shell=True,
            cwd=cwd,
            capture_output=True,
            text=True,
            timeout=timeout,
        )
        return proc.returncode, proc.stdout + proc.stderr, False
    except subprocess.TimeoutExpired as exc:
        output = (exc.stdout or "") + (exc.stderr or "")
        if isinstance(output, bytes):
            output = output.decode(errors="replace")
        return 124, output, True


def parse_failing_tests(output: str) -> tuple[str, ...]:
    names = _FAIL_LINE.findall(output)
    seen: list[str] = []
    for name in names:
        if name not in seen:
            seen.append(name)
    return tuple(seen)


def validate(
    candidate: PatchCandidate,
    bug: BugInstance,
    workdir: Path,
    timeout: float = 300.0,
) -> ValidationOutcome:
    """Run the bug's build and test commands inside ``workdir`` (which must
    already hold a pristine copy with the candidate applied) and classify
    the result. A timed-out test run counts as TestsFailed with a marker."""
    code, output, timed_out = _run(bug.build_command, workdir, timeout)
    if timed_out or code != 0:
        return ValidationOutcome.compile_error(output or f"build exit code {code}")

    code, output, timed_out = _run(bug.test_command, workdir, timeout)
    if timed_out:
        return ValidationOutcome.tests_failed(("<timeout>",), output, timed_out=True)
    if code != 0:
        return ValidationOutcome.tests_failed(parse_failing_tests(output), output)

    if bug.reference_patch is not None and bug.reference_patch.exists():
        reference = bug.reference_patch.read_text()
        if tokens_equal(candidate.patched_source, reference):
            return ValidationOutcome.reference_equivalent()
    return ValidationOutcome.plausible()
