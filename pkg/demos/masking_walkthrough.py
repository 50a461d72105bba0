#!/usr/bin/env python3
"""Walk one buggy line through template selection, masking, and donor fills.

Run from the repository root:

    python demos/masking_walkthrough.py
"""

from pathlib import Path

from maskrepair.fill import FillRequest, build_context, build_pool, donor_fill
from maskrepair.errors import EmptyPool, NotApplicable
from maskrepair.syntax import parse
from maskrepair.templates import instantiate, select_templates

SOURCE = Path(__file__).resolve().parents[1] / "tests/fixtures/snippets/gcd_guard.java"
BUGGY_LINE = 3  # if (u * v == 0) {


def main() -> None:
    source = SOURCE.read_text()
    unit = parse(source)
    print("buggy line:", unit.line_text(BUGGY_LINE).strip())
    print()

    sites = select_templates(unit, BUGGY_LINE)
    print(f"{len(sites)} match sites, in enumeration order:")
    for site in sites:
        print(f"  {str(site.template):18} on {site.node.kind.value}")
    print()

    pool = build_pool(unit)
    for site in sites:
        try:
            candidates = instantiate(site, unit)
        except NotApplicable:
            continue
        for candidate in candidates[:2]:
            label = f"[{candidate.edit_kind.value}]"
            shown = candidate.masked_line_text or "(statement deleted)"
            print(f"{str(candidate.template):18} {label:14} {shown.splitlines()[0]}")
            if candidate.mask_count == 0:
                continue
            request = FillRequest(
                context_text=build_context(
                    unit, BUGGY_LINE, candidate.masked_line_text, candidate.replace_range
                ),
                masked_line=candidate.masked_line_text,
                mask_count=candidate.mask_count,
                beam_size=5,
            )
            try:
                fills = donor_fill(request, pool, site)
            except EmptyPool as exc:
                print(f"{'':34} donor pool: ({exc})")
                continue
            print(f"{'':34} donor fills: {[c.fills[0] for c in fills]}")


if __name__ == "__main__":
    main()
