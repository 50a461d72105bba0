from __future__ import annotations

import json

from maskrepair.bench import load_manifest, report_path, run_bench
from maskrepair.bench.manifest import BenchmarkManifest
from maskrepair.fill import FillerConfig
from maskrepair.pipeline import RunBudget

from conftest import FIXTURES

MANIFEST = FIXTURES / "microbench" / "manifest.json"


def subset_manifest(ids) -> BenchmarkManifest:
    manifest = load_manifest(MANIFEST)
    manifest.bugs = [b for b in manifest.bugs if b.id in ids]
    return manifest


def quick_budget(**kw) -> RunBudget:
    defaults = dict(beam_size=250, wall_clock_limit=120.0, command_timeout=30.0)
    defaults.update(kw)
    return RunBudget(**defaults)


def strip_volatile(payload: dict) -> dict:
    clean = {k: v for k, v in payload.items() if k != "volatile"}
    if "per_bug" in clean:
        clean["per_bug"] = {
            k: {kk: vv for kk, vv in v.items() if kk != "volatile"}
            for k, v in clean["per_bug"].items()
        }
    return clean


def test_oracle_bench_subset_precision(tmp_path):
    manifest = subset_manifest({"b03_gcd", "b05_midpoint", "b14_bounds"})
    metrics = run_bench(
        manifest, quick_budget(), FillerConfig(backend="oracle"), tmp_path / "out"
    )
    assert metrics.attempted == 3
    assert metrics.plausible == 3
    assert metrics.reference_equivalent == 3
    assert metrics.precision == 1.0
    assert "100.00%" in metrics.render_text()


def test_donor_bench_missing_ingredients(tmp_path):
    """Bugs whose fix token does not occur locally stay unfixed under the
    donor backend (zero reference-equivalent outcomes)."""
    manifest = subset_manifest({"b01_lastindex"})
    metrics = run_bench(
        manifest,
        quick_budget(max_candidates=40),
        FillerConfig(backend="donor"),
        tmp_path / "out",
    )
    assert metrics.attempted == 1
    assert metrics.reference_equivalent == 0


def test_empty_manifest(tmp_path):
    manifest = subset_manifest(set())
    metrics = run_bench(manifest, quick_budget(), FillerConfig(backend="oracle"), tmp_path / "out")
    assert metrics.attempted == 0
    assert metrics.precision is None
    assert "–" in metrics.render_text()


def test_resumption_skips_and_never_rewrites(tmp_path):
    manifest = subset_manifest({"b03_gcd", "b05_midpoint"})
    out = tmp_path / "out"
    run_bench(manifest, quick_budget(), FillerConfig(backend="oracle"), out)
    marker = report_path(out, "b03_gcd")
    original = json.loads(marker.read_text())
    tampered = dict(original)
    tampered["counts"] = dict(original["counts"], reference_equivalent=0, plausible=0)
    marker.write_text(json.dumps(tampered, indent=2, sort_keys=True) + "\n")

    metrics = run_bench(manifest, quick_budget(), FillerConfig(backend="oracle"), out)
    # resumed run trusts the recorded outcome rather than recomputing it
    assert json.loads(marker.read_text()) == tampered
    assert metrics.reference_equivalent == 1

    rerun = run_bench(manifest, quick_budget(), FillerConfig(backend="oracle"), out, rerun=True)
    assert rerun.reference_equivalent == 2
    assert json.loads(marker.read_text())["counts"]["reference_equivalent"] == 1


def test_bench_runs_are_deterministic(tmp_path):
    manifest = subset_manifest({"b03_gcd", "b13_window", "b14_bounds"})
    payloads = []
    for run in ("a", "b"):
        run_bench(manifest, quick_budget(), FillerConfig(backend="oracle"), tmp_path / run)
        payload = strip_volatile(json.loads((tmp_path / run / "metrics.json").read_text()))
        payloads.append(json.dumps(payload, sort_keys=True))
    assert payloads[0] == payloads[1]


def test_aggregates_match_per_bug_reports(tmp_path):
    manifest = subset_manifest({"b03_gcd", "b05_midpoint"})
    out = tmp_path / "out"
    metrics = run_bench(manifest, quick_budget(), FillerConfig(backend="oracle"), out)
    recomputed_plausible = 0
    for bug in manifest.bugs:
        payload = json.loads(report_path(out, bug.id).read_text())
        if payload["counts"]["plausible"] > 0:
            recomputed_plausible += 1
    assert recomputed_plausible == metrics.plausible


def test_setup_error_bug_recorded_not_fatal(tmp_path):
    manifest = subset_manifest({"b03_gcd"})
    broken = manifest.bugs[0]
    import dataclasses

    bad = dataclasses.replace(broken)
    bad.id = "bad"
    bad.source_file = tmp_path / "Gone.java"
    manifest.bugs = [bad, broken]
    metrics = run_bench(manifest, quick_budget(), FillerConfig(backend="oracle"), tmp_path / "out")
    assert metrics.attempted == 2
    assert metrics.per_bug["bad"]["status"] == "setup-error"
    assert metrics.per_bug["b03_gcd"]["counts"]["reference_equivalent"] == 1
