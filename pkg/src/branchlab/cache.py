"""Persistent multiplicity memo: one JSON object per line, rewritten atomically."""

from __future__ import annotations

import json
import os
import tempfile
import threading
from pathlib import Path

CACHE_ENV = "BRANCHLAB_CACHE"
DEFAULT_DIR = ".branchlab-cache"
FILENAME = "multiplicities.jsonl"

Key = tuple[str, tuple[int, ...], tuple[int, ...]]


def default_cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV) or Path.cwd() / DEFAULT_DIR)


def _read(path: Path) -> dict[Key, int]:
    out: dict[Key, int] = {}
    if not path.exists():
        return out
    with path.open() as fh:
        for line in fh:
            try:
                rec = json.loads(line)
                key = rec["key"]
                out[(key["embedding"], tuple(key["mu"]), tuple(key["lambda"]))] = int(rec["value"])
            except (ValueError, KeyError, TypeError):
                continue  # torn or foreign line; the memo simply misses it
    return out


class MultiplicityCache:
    """Memo of ``(embedding fingerprint, mu, lambda) -> multiplicity`` backed by a JSONL file.

    Writes go to a temporary file in the same directory followed by
    ``os.replace``, so readers only ever see a complete file.
    """

    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.path = self.directory / FILENAME
        self._data = _read(self.path)
        self._dirty = False
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._data)

    def get(self, fingerprint: str, mu, lam) -> int | None:
        return self._data.get((fingerprint, tuple(mu), tuple(lam)))

    def put(self, fingerprint: str, mu, lam, value: int) -> None:
        key = (fingerprint, tuple(mu), tuple(lam))
        with self._lock:
            if self._data.get(key) != value:
                self._data[key] = int(value)
                self._dirty = True

    def flush(self) -> None:
        with self._lock:
            if not self._dirty:
                return
            self.directory.mkdir(parents=True, exist_ok=True)
            merged = _read(self.path)
            merged.update(self._data)
            self._data = merged
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".jsonl")
            try:
                with os.fdopen(fd, "w") as fh:
                    for (fp, mu, lam), value in sorted(merged.items()):
                        rec = {"key": {"embedding": fp, "mu": list(mu), "lambda": list(lam)}, "value": value}
                        fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
                    fh.flush()
                    os.fsync(fh.fileno())
                os.chmod(tmp, 0o644)
                os.replace(tmp, self.path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
            self._dirty = False

    def __enter__(self) -> MultiplicityCache:
        return self

    def __exit__(self, *exc) -> None:
        self.flush()
