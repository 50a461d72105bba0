"""Batch orchestration over a benchmark manifest, with resumable reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..fill import FillerConfig, make_filler
from ..pipeline import RepairReport, RunBudget, repair
from ..templates import TemplateOrder

REPORT_SUFFIX = ".report.json"


@dataclass
class MetricsReport:
    per_bug: dict[str, dict] = field(default_factory=dict)
    config_header: dict = field(default_factory=dict)
    total_wall_seconds: float = 0.0

    @property
    def attempted(self) -> int:
        return len(self.per_bug)

    @property
    def plausible(self) -> int:
        return sum(1 for s in self.per_bug.values() if s["counts"]["plausible"] > 0)

    @property
    def reference_equivalent(self) -> int:
        return sum(
            1 for s in self.per_bug.values() if s["counts"]["reference_equivalent"] > 0
        )

    @property
    def precision(self) -> Optional[float]:
        return None if self.plausible == 0 else self.reference_equivalent / self.plausible

    @property
    def mean_candidates_validated(self) -> Optional[float]:
        if not self.per_bug:
            return None
        return sum(s["counts"]["validated"] for s in self.per_bug.values()) / len(self.per_bug)

    def to_dict(self) -> dict:
        precision = self.precision
        mean_validated = self.mean_candidates_validated
        return {
            "schema": "maskrepair-metrics/1",
            "config": self.config_header,
            "bugs_attempted": self.attempted,
            "bugs_plausible": self.plausible,
            "bugs_reference_equivalent": self.reference_equivalent,
            "plausible_precision": precision,
            "mean_candidates_validated": mean_validated,
            "per_bug": {
                bug_id: {k: v for k, v in summary.items() if k != "volatile"}
                for bug_id, summary in sorted(self.per_bug.items())
            },
            "volatile": {"total_wall_seconds": self.total_wall_seconds},
        }

    def render_text(self) -> str:
        precision = self.precision
        precision_text = "–" if precision is None else f"{100 * precision:.2f}%"
        mean = self.mean_candidates_validated
        lines = [
            f"bugs attempted:            {self.attempted}",
            f"bugs with plausible patch: {self.plausible}",
            f"bugs reference-equivalent: {self.reference_equivalent}",
            f"plausible precision:       {precision_text}",
            f"mean candidates validated: {'–' if mean is None else f'{mean:.1f}'}",
            f"total wall time:           {self.total_wall_seconds:.1f}s",
        ]
        return "\n".join(lines)


def report_path(out_dir: Path, bug_id: str) -> Path:
    return Path(out_dir) / f"{bug_id}{REPORT_SUFFIX}"


def run_bench(
    manifest,
    budget: RunBudget,
    filler_config: FillerConfig,
    out_dir: Path,
    rerun: bool = False,
    order: Optional[TemplateOrder] = None,
    validation_workers: int = 1,
) -> MetricsReport:
    """Repair every bug in the manifest sequentially, writing one report per
    bug plus an aggregate. Bugs with an existing report are skipped unless
    ``rerun`` is set, and resumption never rewrites previous outcomes."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    started = time.monotonic()
    metrics = MetricsReport(
        config_header={
            "filler": filler_config.backend,
            "beam_size": budget.beam_size,
            "wall_clock_limit": budget.wall_clock_limit,
            "max_candidates": budget.max_candidates,
            "stop_on_first_plausible": budget.stop_on_first_plausible,
            "endpoint": filler_config.endpoint or "",
            "manifest": str(manifest.path),
        }
    )

    for bug in manifest.bugs:
        destination = report_path(out_dir, bug.id)
        if destination.exists() and not rerun:
            metrics.per_bug[bug.id] = json.loads(destination.read_text())
            continue
        reference_text = (
            bug.reference_patch.read_text()
            if filler_config.backend == "oracle" and bug.reference_patch
            else None
        )
        try:
            filler = make_filler(filler_config, reference_text=reference_text)
            report = repair(
                bug,
                budget,
                filler,
                out_dir=out_dir,
                order=order,
                validation_workers=validation_workers,
            )
        except Exception as exc:  # a broken bug never kills the batch
            report = RepairReport(bug_id=bug.id, status="setup-error", error=str(exc))
        summary = report.to_dict()
        destination.write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
        metrics.per_bug[bug.id] = summary

    metrics.total_wall_seconds = time.monotonic() - started
    (out_dir / "metrics.json").write_text(
        json.dumps(metrics.to_dict(), indent=2, sort_keys=True) + "\n"
    )
    return metrics
