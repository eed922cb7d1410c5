"""Content-addressed on-disk cache for CLI payloads."""
from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
import tempfile
from typing import Callable

from liechar.serialize import SCHEMA_VERSION

DEFAULT_DIR = ".liechar-cache"


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class ResultCache:
    """Stores canonical JSON payloads keyed by (schema, algebra, op, params).

    Entries carry a checksum of their payload; a corrupt or mismatched entry
    is treated as a miss.  Writes go through a temporary file and an atomic
    rename.
    """

    def __init__(self, root: str | os.PathLike | None = None):
        if root is None:
            root = os.environ.get("LIECHAR_CACHE", DEFAULT_DIR)
        self.root = Path(root)

    @staticmethod
    def make_key(algebra: str, op: str, params: dict) -> dict:
        return {"schema_version": SCHEMA_VERSION, "algebra": algebra, "op": op, "params": params}

    def path_for(self, key: dict) -> Path:
        digest = _sha256(json.dumps(key, sort_keys=True))
        return self.root / f"{digest}.json"

    def get(self, key: dict) -> str | None:
        path = self.path_for(key)
        try:
            entry = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None
        if entry.get("key") != key:
            return None
        payload = entry.get("payload")
        if not isinstance(payload, str) or entry.get("checksum") != _sha256(payload):
            return None
        return payload

    def put(self, key: dict, payload: str) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        entry = json.dumps({"key": key, "payload": payload, "checksum": _sha256(payload)}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(entry)
            os.replace(tmp, self.path_for(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get_or_compute(self, key: dict, compute: Callable[[], str]) -> str:
        hit = self.get(key)
        if hit is not None:
            return hit
        payload = compute()
        self.put(key, payload)
        return payload

    def clear(self) -> None:
        if self.root.is_dir():
            for p in self.root.glob("*.json"):
                p.unlink()
