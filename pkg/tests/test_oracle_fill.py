from __future__ import annotations

from maskrepair.fill import FillRequest, OracleFiller, derive_fill


def test_derive_fill_basic():
    masked = "int f() {\n    return <mask>;\n}"
    reference = "int f() {\n    return a + b;\n}"
    assert derive_fill(masked, reference, "<mask>") == "a + b"


def test_derive_fill_empty_fill():
    masked = "x = y<mask>;"
    assert derive_fill(masked, "x = y;", "<mask>") == ""


def test_derive_fill_misaligned_returns_none():
    masked = "return <mask>;"
    assert derive_fill(masked, "yield 1;", "<mask>") is None
    assert derive_fill("no mask here", "whatever", "<mask>") is None
    assert derive_fill("a <mask> b <mask>", "a x b y", "<mask>") is None


def test_oracle_filler_puts_reference_fill_behind_decoys():
    class Stub:
        patched_unit_text = "return <mask>;"
        site = None

    request = FillRequest(
        context_text="// return x;\nreturn <mask>;",
        masked_line="return <mask>;",
        mask_count=1,
        beam_size=250,
    )
    filler = OracleFiller("return x + 1;", decoys=("__nope__",))
    out = filler.fill(request, Stub(), None)
    assert [c.fills[0] for c in out] == ["__nope__", "x + 1"]
    scores = [c.score for c in out]
    assert scores == sorted(scores, reverse=True)


def test_oracle_filler_respects_beam_one():
    class Stub:
        patched_unit_text = "return <mask>;"
        site = None

    request = FillRequest(
        context_text="// c\nreturn <mask>;",
        masked_line="return <mask>;",
        mask_count=1,
        beam_size=1,
    )
    out = OracleFiller("return 7;").fill(request, Stub(), None)
    assert [c.fills[0] for c in out] == ["7"]


def test_oracle_filler_empty_when_underivable():
    class Stub:
        patched_unit_text = "return <mask>;"
        site = None

    request = FillRequest(
        context_text="// c\nreturn <mask>;",
        masked_line="return <mask>;",
        mask_count=1,
        beam_size=10,
    )
    assert OracleFiller("completely different text").fill(request, Stub(), None) == []
