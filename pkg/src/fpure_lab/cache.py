"""On-disk cache of reduced Groebner bases keyed by (ideal, order, p)."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .poly import Effort, GroebnerBasis, Ideal, parse_poly

ENV_VAR = "FPURE_LAB_CACHE"


def ideal_key(I: Ideal) -> str:
    desc = I.ring.describe()
    payload = json.dumps({"ring": desc, "gens": sorted(str(g) for g in I.gens)}, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


class GBCache:
    def __init__(self, directory: str | os.PathLike):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0

    @classmethod
    def from_env(cls, directory: str | None = None) -> "GBCache | None":
        d = os.environ.get(ENV_VAR) or directory
        return cls(d) if d else None

    def _path(self, I: Ideal) -> Path:
        r = I.ring
        return self.dir / f"gb-p{r.p}-{str(r.order).replace('(', '').replace(')', '')}-{ideal_key(I)[:32]}.json"

    def load(self, I: Ideal) -> GroebnerBasis | None:
        path = self._path(I)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("key") != ideal_key(I):
            return None
        basis = tuple(parse_poly(I.ring, s) for s in data["basis"])
        return GroebnerBasis(I.ring, basis, {"cached": True})

    def store(self, I: Ideal, gb: GroebnerBasis) -> None:
        path = self._path(I)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"key": ideal_key(I), "basis": gb.strings()}))
        os.replace(tmp, path)

    def groebner(self, I: Ideal, effort: Effort | None = None) -> GroebnerBasis:
        gb = self.load(I)
        if gb is not None:
            self.hits += 1
            return gb
        self.misses += 1
        gb = I.gb(effort)
        self.store(I, gb)
        return gb
