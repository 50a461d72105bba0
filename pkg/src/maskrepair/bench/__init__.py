"""Benchmark ingestion, batch runs, metrics."""

from .manifest import BenchmarkManifest, expand_command, load_manifest
from .runner import MetricsReport, report_path, run_bench

__all__ = [
    "BenchmarkManifest",
    "MetricsReport",
    "expand_command",
    "load_manifest",
    "report_path",
    "run_bench",
]
