"""Reference-derived fills for recall measurement.

Given the developer-fixed file, the fill that turns a masked candidate into
that exact file (if one exists) is recoverable by aligning the text around
the mask. Useful for answering "could any fill from this template have fixed
the bug?" without a live model: the derived fill is guaranteed to sit inside
the beam, behind a configurable number of decoys.
"""

from __future__ import annotations

from .base import FillCandidate, FillRequest


def derive_fill(patched_with_mask: str, reference_text: str, mask_token: str) -> str | None:
    """The unique fill turning ``patched_with_mask`` into ``reference_text``,
    or None when no single-mask fill can."""
    if patched_with_mask.count(mask_token) != 1:
        return None
    prefix, suffix = patched_with_mask.split(mask_token)
    if (
        len(reference_text) >= len(prefix) + len(suffix)
        and reference_text.startswith(prefix)
        and reference_text.endswith(suffix)
    ):
        return reference_text[len(prefix) : len(reference_text) - len(suffix)]
    return None


class OracleFiller:
    """Backend whose beam always contains the reference fill when one exists."""

    name = "oracle"

    def __init__(self, reference_text: str, decoys: tuple[str, ...] = ("__nope__",)):
        self.reference_text = reference_text
        self.decoys = decoys

    def fill(self, request: FillRequest, candidate, unit, *, transcript=None, deadline=None):
        derived = derive_fill(
            candidate.patched_unit_text, self.reference_text, request.mask_token
        )
        if derived is None:
            return []
        fills = list(self.decoys[: max(0, request.beam_size - 1)]) + [derived]
        fills = fills[-request.beam_size :]
        return [
            FillCandidate(fills=(fill,), score=-float(rank), backend=self.name)
            for rank, fill in enumerate(fills)
        ]
