from __future__ import annotations

from maskrepair import MASK_TOKEN
from maskrepair.fill import build_context
from maskrepair.fill.context import FALLBACK_WINDOW, MAX_CONTEXT_LINES
from maskrepair.syntax import parse
from maskrepair.templates import instantiate, select_templates

from conftest import SNIPPETS


def line_of(src: str, needle: str) -> int:
    for i, line in enumerate(src.splitlines(), start=1):
        if needle in line:
            return i
    raise AssertionError(f"{needle!r} not found")


def masked_candidate(src: str, line: int, template: str):
    unit = parse(src)
    for site in select_templates(unit, line):
        if str(site.template) == template:
            return unit, instantiate(site, unit)[0]
    raise AssertionError(f"no {template} site")


def test_masked_callee_context_shape():
    src = (SNIPPETS / "string_predicate.java").read_text()
    line = line_of(src, "return allResultsMatch")
    unit, cand = masked_candidate(src, line, "T5.name")
    context = build_context(unit, line, cand.masked_line_text, cand.replace_range)
    lines = context.split("\n")
    assert lines[0] == "// return allResultsMatch(n, MAY_BE_STRING_PREDICATE);"
    body = "\n".join(lines[1:])
    assert body.count(MASK_TOKEN) == 1
    assert "return <mask>(n, MAY_BE_STRING_PREDICATE);" in body
    assert body.lstrip().startswith("static boolean mayBeString(Node n, boolean recurse)")
    assert body.rstrip().endswith("}")
    # the original statement text was swapped out, not duplicated
    assert "return allResultsMatch" not in body


def test_minimal_method_context():
    src = "class C {\n  int one() {\n    return 1;\n  }\n}\n"
    unit, cand = masked_candidate(src, 3, "T9")
    context = build_context(unit, 3, cand.masked_line_text, cand.replace_range)
    assert context.split("\n") == [
        "// return 1;",
        "  int one() {",
        "return <mask>;",
        "  }",
    ]


def test_fallback_window_for_field_line():
    filler_lines = "\n".join(f"// pad {i}" for i in range(1, 30))
    src = (
        filler_lines
        + "\nclass C {\n  static int SIZE = computeSize();\n}\n"
        + "\n".join(f"// tail {i}" for i in range(1, 30))
        + "\n"
    )
    unit = parse(src)
    buggy = line_of(src, "static int SIZE")
    masked = "static int SIZE = <mask>;"
    context = build_context(unit, buggy, masked)
    lines = context.split("\n")
    assert lines[0] == "// static int SIZE = computeSize();"
    # 10 above + masked line + 10 below = 21 body lines
    assert len(lines) - 1 == 2 * FALLBACK_WINDOW + 1
    assert masked in lines
    assert context.count(MASK_TOKEN) == 1


def test_insertion_context_keeps_original_statement():
    src = (SNIPPETS / "coverage.java").read_text()
    line = line_of(src, "total += scaled;")
    unit, cand = masked_candidate(src, line, "T10.simple")
    context = build_context(unit, line, cand.masked_line_text, cand.replace_range)
    body = context.split("\n")[1:]
    idx_mask = body.index("<mask>;")
    idx_stmt = next(i for i, l in enumerate(body) if "total += scaled;" in l)
    assert idx_mask == idx_stmt - 1
    assert context.split("\n")[0] == "// total += scaled;"


def test_long_method_truncated_near_mask():
    body = "\n".join(f"    mark({i});" for i in range(200))
    src = f"class C {{\n  void run() {{\n{body}\n    int hit = target();\n  }}\n}}\n"
    unit = parse(src)
    line = line_of(src, "int hit = target();")
    unit2, cand = masked_candidate(src, line, "T5.name")
    context = build_context(unit, line, cand.masked_line_text, cand.replace_range)
    lines = context.split("\n")
    assert len(lines) - 1 <= MAX_CONTEXT_LINES
    assert context.count(MASK_TOKEN) == 1


def test_context_contains_masked_line_exactly_once():
    src = (SNIPPETS / "gcd_guard.java").read_text()
    line = line_of(src, "if (u * v == 0) {")
    unit, cand = masked_candidate(src, line, "T2.replace-whole")
    context = build_context(unit, line, cand.masked_line_text, cand.replace_range)
    assert context.count(cand.masked_line_text) == 1
    assert context.split("\n")[0] == "// if (u * v == 0) {"
