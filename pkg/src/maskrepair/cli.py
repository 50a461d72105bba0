"""Command-line surface: repair one bug, run a benchmark, inspect templates.

Exit codes for `repair`: 0 = plausible patch found, 1 = none found,
2 = setup error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .bench import expand_command, load_manifest, run_bench
from .errors import NotApplicable, RepairError
from .fill import FillerConfig
from .fill import make_filler
from .pipeline import BugInstance, RunBudget
from .pipeline.repair import exit_code, repair as run_repair
from .syntax import parse
from .templates import CATALOG, DESCRIPTIONS, TemplateId, instantiate, select_templates


def _filler_options(fn):
    fn = click.option("--filler", "backend", default="donor",
                      type=click.Choice(["donor", "span", "sequential", "prompt", "oracle"]),
                      show_default=True, help="mask prediction backend")(fn)
    fn = click.option("--endpoint", default=None, help="HTTP endpoint for remote backends")(fn)
    fn = click.option("--timeout", default=30.0, show_default=True,
                      help="per-request timeout in seconds")(fn)
    return fn


def _budget_options(fn):
    fn = click.option("--beam", default=250, show_default=True, help="fill candidates per mask")(fn)
    fn = click.option("--time-limit", default=18000.0, show_default=True,
                      help="wall-clock seconds per bug")(fn)
    fn = click.option("--max-candidates", default=100000, show_default=True)(fn)
    fn = click.option("--exhaustive", is_flag=True,
                      help="validate every candidate instead of stopping at the first plausible one")(fn)
    return fn


def _make_budget(beam, time_limit, max_candidates, exhaustive) -> RunBudget:
    return RunBudget(
        beam_size=beam,
        wall_clock_limit=time_limit,
        max_candidates=max_candidates,
        stop_on_first_plausible=not exhaustive,
    )


def _make_filler_config(backend, endpoint, timeout) -> FillerConfig:
    return FillerConfig(backend=backend, endpoint=endpoint, timeout=timeout)


@click.group()
def main():
    """Template-based program repair via masked fix patterns."""


@main.command("repair")
@click.option("--manifest", "manifest_path", type=click.Path(exists=True), default=None)
@click.option("--bug", "bug_id", default=None, help="bug id inside the manifest")
@click.option("--file", "source_file", type=click.Path(exists=True), default=None,
              help="ad-hoc mode: buggy source file")
@click.option("--line", "lines", multiple=True, type=int, help="ad-hoc mode: buggy line (repeatable)")
@click.option("--build-cmd", default=None, help="ad-hoc mode: build command")
@click.option("--test-cmd", default=None, help="ad-hoc mode: test command")
@click.option("--reference", type=click.Path(exists=True), default=None,
              help="developer-fixed file for equivalence checking")
@click.option("--language", default="java", show_default=True)
@click.option("--out", "out_dir", type=click.Path(), default="repair-out", show_default=True)
@click.option("--validation-workers", default=1, show_default=True)
@_filler_options
@_budget_options
def repair_cmd(manifest_path, bug_id, source_file, lines, build_cmd, test_cmd, reference,
               language, out_dir, validation_workers, backend, endpoint, timeout,
               beam, time_limit, max_candidates, exhaustive):
    """Repair one bug, from a manifest entry or ad-hoc flags."""
    try:
        if manifest_path and bug_id:
            manifest = load_manifest(manifest_path)
            bug = manifest.bug(bug_id)
        elif source_file and lines and build_cmd and test_cmd:
            bug = BugInstance(
                id=Path(source_file).stem,
                source_file=Path(source_file).resolve(),
                buggy_lines=list(lines),
                build_command=expand_command(build_cmd),
                test_command=expand_command(test_cmd),
                reference_patch=Path(reference).resolve() if reference else None,
                language=language,
            )
        else:
            raise click.UsageError(
                "either --manifest/--bug or --file/--line/--build-cmd/--test-cmd is required"
            )
        config = _make_filler_config(backend, endpoint, timeout)
        reference_text = (
            bug.reference_patch.read_text()
            if backend == "oracle" and bug.reference_patch
            else None
        )
        filler = make_filler(config, reference_text=reference_text)
    except (RepairError, OSError, ValueError) as exc:
        click.echo(f"setup error: {exc}", err=True)
        sys.exit(2)

    budget = _make_budget(beam, time_limit, max_candidates, exhaustive)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report = run_repair(bug, budget, filler, out_dir=out, validation_workers=validation_workers)
    payload = report.to_dict()
    (out / f"{bug.id}.report.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    counts = report.counts
    click.echo(
        f"{bug.id}: generated={counts['generated']} validated={counts['validated']} "
        f"plausible={counts['plausible']} reference_equivalent={counts['reference_equivalent']}"
    )
    for record in report.records:
        if record.outcome.is_plausible:
            click.echo(record.diff, nl=False)
            break
    sys.exit(exit_code(report))


@main.command("bench")
@click.option("--manifest", "manifest_path", type=click.Path(exists=True), required=True)
@click.option("--out", "out_dir", type=click.Path(), default="bench-out", show_default=True)
@click.option("--rerun", is_flag=True, help="recompute bugs that already have reports")
@click.option("--validation-workers", default=1, show_default=True)
@_filler_options
@_budget_options
def bench_cmd(manifest_path, out_dir, rerun, validation_workers, backend, endpoint, timeout,
              beam, time_limit, max_candidates, exhaustive):
    """Run every bug in a manifest and write per-bug plus aggregate reports."""
    try:
        manifest = load_manifest(manifest_path)
    except RepairError as exc:
        click.echo(f"setup error: {exc}", err=True)
        sys.exit(2)
    metrics = run_bench(
        manifest,
        _make_budget(beam, time_limit, max_candidates, exhaustive),
        _make_filler_config(backend, endpoint, timeout),
        Path(out_dir),
        rerun=rerun,
        validation_workers=validation_workers,
    )
    click.echo(metrics.render_text())


@main.command("mask")
@click.option("--file", "source_file", type=click.Path(exists=True), required=True)
@click.option("--line", required=True, type=int)
@click.option("--template", "template_filter", default=None,
              help="restrict to one template id, e.g. T5.name")
@click.option("--dry-run", is_flag=True, default=True,
              help="always on: mask never fills or validates")
@click.option("--language", default="java", show_default=True)
def mask_cmd(source_file, line, template_filter, dry_run, language):
    """Print every masked candidate for a buggy line (no filling, no validation)."""
    try:
        unit = parse(Path(source_file).read_text(), language=language)
        wanted = TemplateId.parse(template_filter) if template_filter else None
        sites = select_templates(unit, line)
    except (RepairError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    shown = 0
    for site in sites:
        if wanted and site.template != wanted:
            continue
        try:
            candidates = instantiate(site, unit)
        except NotApplicable:
            continue
        for candidate in candidates:
            shown += 1
            click.echo(
                f"--- {candidate.template} [{candidate.edit_kind.value}] "
                f"masks={candidate.mask_count}"
            )
            click.echo(candidate.masked_line_text if candidate.mask_count or candidate.masked_line_text else "(deleted)")
    click.echo(f"{shown} candidates")


@main.group("templates")
def templates_group():
    """Inspect the fix-template catalog."""


@templates_group.command("list")
def templates_list():
    """Dump the catalog with one-line descriptions."""
    for template in CATALOG:
        click.echo(f"{str(template):18} {DESCRIPTIONS[template]}")


if __name__ == "__main__":
    main()
