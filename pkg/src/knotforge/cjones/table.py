"""Tables ``n -> J_{K,n}`` with an on-disk cache."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, Optional

from ..exactalg.laurent import LaurentPoly
from .braid import BraidWord
from .statesum import colored_jones

CACHE_ENV = "KNOTFORGE_CACHE"


def cache_dir(explicit: Optional[str] = None) -> Optional[Path]:
    """``KNOTFORGE_CACHE`` wins over an explicit directory; None disables caching."""
    env = os.environ.get(CACHE_ENV)
    chosen = env or explicit
    return Path(chosen) if chosen else None


def _entry_path(root: Path, braid: BraidWord, n: int) -> Path:
    return root / "jones" / f"{braid.key()}_n{n}.json"


def _read(path: Path, braid: BraidWord, n: int) -> Optional[LaurentPoly]:
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("braid") != braid.to_json() or data.get("n") != n:
        return None
    return LaurentPoly.from_json(data["J"])


def _write(path: Path, braid: BraidWord, n: int, value: LaurentPoly):
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {"braid": braid.to_json(), "n": n, "framing": 0, "J": value.to_json()}
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(doc, fh)
    os.replace(tmp, path)


@dataclass
class ColoredJonesTable:
    """Zero-framed ``J_{K,n}`` for ``n = 1..N`` with ``J_0 = 0`` and ``J_{-n} = -J_n``."""

    knot_id: str
    entries: Dict[int, LaurentPoly] = field(default_factory=dict)

    @property
    def N(self) -> int:
        return max(self.entries) if self.entries else 0

    def __getitem__(self, n: int) -> LaurentPoly:
        if n == 0:
            return LaurentPoly({})
        if n < 0:
            return -self[-n]
        try:
            return self.entries[n]
        except KeyError:
            raise KeyError(f"J_{n} not in table (N = {self.N})") from None

    def __contains__(self, n: int) -> bool:
        return n == 0 or abs(n) in self.entries

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.entries))

    def truncated(self, N: int) -> "ColoredJonesTable":
        return ColoredJonesTable(self.knot_id, {n: v for n, v in self.entries.items() if n <= N})

    def to_json(self) -> dict:
        return {"knot": self.knot_id, "framing": 0,
                "entries": {str(n): self.entries[n].to_json() for n in sorted(self.entries)}}

    @classmethod
    def from_json(cls, data) -> "ColoredJonesTable":
        return cls(data["knot"], {int(n): LaurentPoly.from_json(v) for n, v in data["entries"].items()})


def jones_table(braid: BraidWord, N: int, cache: Optional[str] = None) -> ColoredJonesTable:
    """``J_{K,1..N}`` of the braid closure, read from or written to the cache."""
    if N < 1:
        raise ValueError("table length N must be at least 1")
    root = cache_dir(cache)
    entries = {}
    for n in range(1, N + 1):
        value = None
        path = _entry_path(root, braid, n) if root else None
        if path is not None and path.exists():
            value = _read(path, braid, n)
        if value is None:
            value = colored_jones(braid, n)
            if path is not None:
                _write(path, braid, n, value)
        entries[n] = value
    return ColoredJonesTable(f"braid[{braid.strands}]:{braid}", entries)
