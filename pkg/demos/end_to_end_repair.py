#!/usr/bin/env python3
"""Repair one bundled micro-benchmark bug end to end and show the result.

Uses the oracle backend (fills derived from the shipped developer fix) so
the demo runs offline; swap in a span/sequential/prompt backend plus an
endpoint to drive a real model.

    python demos/end_to_end_repair.py [bug-id]
"""

import sys
import tempfile
from pathlib import Path

from maskrepair.bench import load_manifest
from maskrepair.fill import OracleFiller
from maskrepair.pipeline import RunBudget
from maskrepair.pipeline.repair import repair

MANIFEST = Path(__file__).resolve().parents[1] / "tests/fixtures/microbench/manifest.json"


def main() -> None:
    bug_id = sys.argv[1] if len(sys.argv) > 1 else "b03_gcd"
    manifest = load_manifest(MANIFEST)
    bug = manifest.bug(bug_id)
    print(f"bug {bug.id}: line(s) {bug.buggy_lines} of {bug.source_file.name}")
    print(f"  build: {bug.build_command}")
    print(f"  test:  {bug.test_command}")
    print()

    filler = OracleFiller(bug.reference_patch.read_text())
    budget = RunBudget(beam_size=250, wall_clock_limit=120.0, command_timeout=30.0)
    with tempfile.TemporaryDirectory() as out:
        report = repair(bug, budget, filler, out_dir=Path(out))

    for record in report.records:
        template, backend, rank = record.origin
        print(f"  candidate {record.rank}: {template} via {backend}#{rank} -> {record.outcome.status}")
    print()
    counts = report.counts
    print(
        f"validated {counts['validated']}, plausible {counts['plausible']}, "
        f"reference-equivalent {counts['reference_equivalent']} "
        f"in {report.elapsed_seconds:.1f}s"
    )
    winner = next((r for r in report.records if r.outcome.is_plausible), None)
    if winner:
        print()
        print(winner.diff, end="")


if __name__ == "__main__":
    main()
