"""Benchmark manifest loading and validation.

Schema (JSON, versioned):

    {
      "schema": "maskrepair-bench/1",
      "defaults": {"language": "java", "build_command": ..., "test_command": ...,
                   "project_root": ...},
      "bugs": [
        {"id": str, "source_file": path, "buggy_lines": [int, ...],
         "build_command": str, "test_command": str,
         "reference_patch": path?, "language": str?, "project_root": path?}
      ]
    }

Relative paths resolve against the manifest's directory. The token
``{python}`` inside commands expands to the running interpreter, keeping
bundled benchmarks portable across environments.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import MissingPath, SchemaError
from ..pipeline import BugInstance

SCHEMA = "maskrepair-bench/1"


@dataclass
class BenchmarkManifest:
    path: Path
    bugs: list[BugInstance]
    defaults: dict = field(default_factory=dict)
    extras: dict[str, dict] = field(default_factory=dict)

    def bug(self, bug_id: str) -> BugInstance:
        for bug in self.bugs:
            if bug.id == bug_id:
                return bug
        raise SchemaError(f"no bug {bug_id!r} in {self.path}")


def expand_command(command: str) -> str:
    return command.replace("{python}", sys.executable)


_KNOWN_BUG_FIELDS = {
    "id",
    "source_file",
    "buggy_lines",
    "build_command",
    "test_command",
    "reference_patch",
    "language",
    "project_root",
}


def load_manifest(path: str | Path) -> BenchmarkManifest:
    path = Path(path)
    if not path.exists():
        raise MissingPath(str(path), "manifest file")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or data.get("schema") != SCHEMA:
        raise SchemaError(f"{path}: expected schema {SCHEMA!r}, got {data.get('schema')!r}")
    defaults = data.get("defaults", {})
    if not isinstance(defaults, dict):
        raise SchemaError(f"{path}: 'defaults' must be an object")
    raw_bugs = data.get("bugs")
    if not isinstance(raw_bugs, list):
        raise SchemaError(f"{path}: 'bugs' must be a list")

    base = path.parent
    bugs: list[BugInstance] = []
    extras: dict[str, dict] = {}
    seen_ids: set[str] = set()
    for index, raw in enumerate(raw_bugs):
        where = f"{path}: bugs[{index}]"
        if not isinstance(raw, dict):
            raise SchemaError(f"{where}: must be an object")
        merged = {**defaults, **raw}
        bug_id = merged.get("id")
        if not bug_id or not isinstance(bug_id, str):
            raise SchemaError(f"{where}: missing 'id'")
        if bug_id in seen_ids:
            raise SchemaError(f"{where}: duplicate bug id {bug_id!r}")
        seen_ids.add(bug_id)

        for req in ("source_file", "buggy_lines", "build_command", "test_command"):
            if req not in merged:
                raise SchemaError(f"{where} ({bug_id}): missing field {req!r}")
        lines = merged["buggy_lines"]
        if (
            not isinstance(lines, list)
            or not lines
            or not all(isinstance(n, int) and n >= 1 for n in lines)
        ):
            raise SchemaError(f"{where} ({bug_id}): 'buggy_lines' must be positive ints")

        source_file = (base / merged["source_file"]).resolve()
        if not source_file.exists():
            raise MissingPath(str(source_file), f"source_file of {bug_id}")
        project_root = (
            (base / merged["project_root"]).resolve()
            if merged.get("project_root")
            else source_file.parent
        )
        if not project_root.exists():
            raise MissingPath(str(project_root), f"project_root of {bug_id}")
        reference = None
        if merged.get("reference_patch"):
            reference = (base / merged["reference_patch"]).resolve()
            if not reference.exists():
                raise MissingPath(str(reference), f"reference_patch of {bug_id}")

        line_count = source_file.read_text().count("\n") + 1
        if max(lines) > line_count:
            raise SchemaError(
                f"{where} ({bug_id}): buggy line {max(lines)} beyond end of file ({line_count} lines)"
            )

        bugs.append(
            BugInstance(
                id=bug_id,
                source_file=source_file,
                buggy_lines=list(lines),
                build_command=expand_command(merged["build_command"]),
                test_command=expand_command(merged["test_command"]),
                reference_patch=reference,
                language=merged.get("language", "java"),
                project_root=project_root,
            )
        )
        extras[bug_id] = {k: v for k, v in raw.items() if k not in _KNOWN_BUG_FIELDS}
    return BenchmarkManifest(path=path, bugs=bugs, defaults=defaults, extras=extras)
