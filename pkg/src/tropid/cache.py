"""Append-only JSON-lines store of computed results.

Each line is one record ``{"operation", "key", "result", "timestamp"}``.
Later records for the same key win.  Only the process that owns the cache
object writes to it; worker processes never touch the file.
"""

from __future__ import annotations

import fcntl
import hashlib
import json
import os
import time
from pathlib import Path
from typing import Any, Optional

ENV_VAR = "TROPID_CACHE_DIR"
DEFAULT_DIR = ".tropid-cache"
FILENAME = "results.jsonl"


def input_key(operation: str, inputs: Any) -> str:
    blob = json.dumps({"op": operation, "in": inputs}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: Optional[os.PathLike] = None):
        if directory is None:
            directory = os.environ.get(ENV_VAR) or DEFAULT_DIR
        self.path = Path(directory) / FILENAME
        self._index: Optional[dict] = None

    def _load(self) -> dict:
        if self._index is None:
            self._index = {}
            if self.path.exists():
                with open(self.path, encoding="utf-8") as fh:
                    for line in fh:
                        try:
                            rec = json.loads(line)
                        except json.JSONDecodeError:
                            continue  # a torn trailing line from an interrupted write
                        if isinstance(rec, dict) and "key" in rec:
                            self._index[rec["key"]] = rec
        return self._index

    def records(self) -> list:
        return list(self._load().values())

    def get(self, operation: str, inputs: Any):
        rec = self._load().get(input_key(operation, inputs))
        return None if rec is None else rec["result"]

    def put(self, operation: str, inputs: Any, result: Any) -> dict:
        rec = {
            "operation": operation,
            "key": input_key(operation, inputs),
            "inputs": inputs,
            "result": result,
            "timestamp": time.time(),
        }
        self.path.parent.mkdir(parents=True, exist_ok=True)
        line = json.dumps(rec, sort_keys=True) + "\n"
        with open(self.path, "a", encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                fh.write(line)
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)
        self._load()[rec["key"]] = rec
        return rec

    def fetch(self, operation: str, inputs: Any, compute):
        """Return the cached result, computing and storing it on a miss."""
        hit = self.get(operation, inputs)
        if hit is not None:
            return hit
        result = compute()
        self.put(operation, inputs, result)
        return result
