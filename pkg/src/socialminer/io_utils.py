"""Small file helpers shared by the pipeline stages."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .errors import StorageError


def atomic_write_text(path: str | Path, text: str) -> None:
    """Write a file atomically: temp file in the same directory, then rename.

    Readers never observe a half-written artifact.
    """
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(
            prefix=target.name + ".", suffix=".tmp", dir=target.parent
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text)
            os.replace(tmp_name, target)
        except BaseException:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
            raise
    except OSError as exc:
        raise StorageError(f"cannot write {target}: {exc}") from exc
