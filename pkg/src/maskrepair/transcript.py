"""Per-bug JSONL transcripts of fill traffic and validation events."""

from __future__ import annotations

import json
import threading
import time
from pathlib import Path
from typing import Optional


class Transcript:
    """Append-only event log; one JSON object per line, replayable."""

    def __init__(self, path: Optional[Path] = None):
        self.path = Path(path) if path else None
        self._lock = threading.Lock()
        if self.path:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.write_text("")

    def record(self, event: str, **payload) -> None:
        if self.path is None:
            return
        entry = {"event": event, "at": time.time(), **payload}
        line = json.dumps(entry, default=str, sort_keys=True)
        with self._lock:
            with self.path.open("a") as fh:
                fh.write(line + "\n")


NULL_TRANSCRIPT = Transcript(None)
