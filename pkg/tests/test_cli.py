from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from maskrepair.cli import main
from maskrepair.templates import CATALOG

from conftest import FIXTURES, SNIPPETS

MANIFEST = FIXTURES / "microbench" / "manifest.json"


@pytest.fixture
def runner():
    return CliRunner()


def test_templates_list_covers_catalog(runner):
    result = runner.invoke(main, ["templates", "list"])
    assert result.exit_code == 0
    for template in CATALOG:
        assert str(template) in result.output


def test_mask_lists_candidates_without_filling(runner):
    result = runner.invoke(
        main,
        ["mask", "--file", str(SNIPPETS / "string_predicate.java"), "--line", "8"],
    )
    assert result.exit_code == 0
    assert "T5.name" in result.output
    assert "return <mask>(n, MAY_BE_STRING_PREDICATE);" in result.output
    assert "candidates" in result.output.splitlines()[-1]


def test_mask_template_filter(runner):
    result = runner.invoke(
        main,
        [
            "mask",
            "--file", str(SNIPPETS / "string_predicate.java"),
            "--line", "8",
            "--template", "T9",
        ],
    )
    assert result.exit_code == 0
    assert "T5.name" not in result.output
    assert "return <mask>;" in result.output


def test_mask_blank_line_errors(runner):
    result = runner.invoke(
        main, ["mask", "--file", str(SNIPPETS / "string_predicate.java"), "--line", "5"]
    )
    assert result.exit_code == 2


def test_repair_exit_zero_on_fix(runner, tmp_path):
    result = runner.invoke(
        main,
        [
            "repair",
            "--manifest", str(MANIFEST),
            "--bug", "b05_midpoint",
            "--filler", "oracle",
            "--out", str(tmp_path),
        ],
    )
    assert result.exit_code == 0, result.output
    assert "reference_equivalent=1" in result.output
    assert "+        int mid = (lo + hi) / 2;" in result.output
    report = json.loads((tmp_path / "b05_midpoint.report.json").read_text())
    assert report["counts"]["reference_equivalent"] == 1


def test_repair_exit_one_when_nothing_plausible(runner, tmp_path):
    result = runner.invoke(
        main,
        [
            "repair",
            "--manifest", str(MANIFEST),
            "--bug", "b01_lastindex",
            "--filler", "donor",
            "--max-candidates", "30",
            "--out", str(tmp_path),
        ],
    )
    assert result.exit_code == 1, result.output


def test_repair_exit_two_on_setup_error(runner, tmp_path):
    result = runner.invoke(
        main,
        ["repair", "--manifest", str(MANIFEST), "--bug", "no_such_bug", "--out", str(tmp_path)],
    )
    assert result.exit_code == 2


def test_repair_adhoc_flags(runner, tmp_path):
    bug_dir = FIXTURES / "microbench" / "projects" / "b06_average"
    result = runner.invoke(
        main,
        [
            "repair",
            "--file", str(bug_dir / "Stats.java"),
            "--line", "3",
            "--build-cmd", "{python} -m maskrepair.javatool compile Stats.java StatsCheck.java",
            "--test-cmd",
            "{python} -m maskrepair.javatool test Stats.java StatsCheck.java --main StatsCheck",
            "--reference", str(FIXTURES / "microbench" / "references" / "b06_average" / "Stats.java"),
            "--filler", "oracle",
            "--out", str(tmp_path),
        ],
    )
    assert result.exit_code == 0, result.output


def test_bench_command(runner, tmp_path):
    result = runner.invoke(
        main,
        [
            "bench",
            "--manifest", str(MANIFEST),
            "--filler", "oracle",
            "--out", str(tmp_path),
            "--time-limit", "120",
        ],
    )
    assert result.exit_code == 0, result.output
    assert "bugs attempted:            14" in result.output
    assert (tmp_path / "metrics.json").exists()
