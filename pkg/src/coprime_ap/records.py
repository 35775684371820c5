"""Output records (text, CSV, JSON-lines) and the on-disk result cache."""

from __future__ import annotations

import csv
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .bounds import lower_bound, upper_bound
from .errors import ConsistencyError
from .rrs import ApWitness, validate_witness

log = logging.getLogger(__name__)

CSV_FIELDS = ("n", "f", "lower", "upper", "first", "diff", "len")
CACHE_FIELDS = ("n", "f", "first", "diff", "len")
CACHE_ENV = "COPRIME_AP_CACHE"


@dataclass(frozen=True)
class OutputRecord:
    n: int
    lower: int
    upper: int
    f: int | None = None
    witness: tuple[int, int, int] | None = None
    phi: int | None = None

    @classmethod
    def from_witness(cls, w: ApWitness, lower: int, upper: int, phi: int | None = None) -> OutputRecord:
        return cls(w.n, lower, upper, w.length, w.as_triple(), phi)

    def to_json(self) -> str:
        obj: dict = {"n": self.n}
        if self.f is not None:
            obj["f"] = self.f
        obj["lower"] = self.lower
        obj["upper"] = self.upper
        if self.witness is not None:
            first, diff, length = self.witness
            obj["witness"] = {"first": first, "difference": diff, "length": length}
        if self.phi is not None:
            obj["phi"] = self.phi
        return json.dumps(obj)

    @classmethod
    def from_json(cls, line: str) -> OutputRecord:
        obj = json.loads(line)
        w = obj.get("witness")
        return cls(
            obj["n"],
            obj["lower"],
            obj["upper"],
            obj.get("f"),
            (w["first"], w["difference"], w["length"]) if w is not None else None,
            obj.get("phi"),
        )

    def to_csv(self) -> str:
        first, diff, length = self.witness if self.witness is not None else ("", "", "")
        f = "" if self.f is None else self.f
        return ",".join(str(v) for v in (self.n, f, self.lower, self.upper, first, diff, length))

    @classmethod
    def from_csv(cls, line: str) -> OutputRecord:
        n, f, lower, upper, first, diff, length = line.rstrip("\n").split(",")
        witness = (int(first), int(diff), int(length)) if first else None
        return cls(int(n), int(lower), int(upper), int(f) if f else None, witness)

    def to_text(self) -> str:
        parts = [f"n={self.n}"]
        if self.f is not None:
            parts.append(f"f={self.f}")
        parts += [f"lower={self.lower}", f"upper={self.upper}"]
        if self.witness is not None:
            parts.append("witness=({},{},{})".format(*self.witness))
        if self.phi is not None:
            parts.append(f"phi={self.phi}")
        return " ".join(parts)


def csv_header() -> str:
    return ",".join(CSV_FIELDS)


class ResultCache:
    """CSV-backed map n -> exact witness.

    Loaded on first lookup. Entries that fail witness validation or fall
    outside the closed-form bounds are dropped rather than trusted.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._entries: dict[int, ApWitness] | None = None
        self._dirty = False

    @classmethod
    def from_env(cls, override: str | None = None) -> ResultCache | None:
        path = override or os.environ.get(CACHE_ENV)
        return cls(path) if path else None

    def _load(self) -> dict[int, ApWitness]:
        if self._entries is not None:
            return self._entries
        entries: dict[int, ApWitness] = {}
        dropped = 0
        if self.path.exists():
            try:
                with self.path.open(newline="") as fh:
                    for row in csv.DictReader(fh):
                        try:
                            n, f = int(row["n"]), int(row["f"])
                            w = ApWitness(n, int(row["first"]), int(row["diff"]), int(row["len"]))
                            validate_witness(w)
                            if f != w.length or not lower_bound(n) <= f <= upper_bound(n):
                                raise ConsistencyError(f"cached f={f} rejected for n={n}")
                        except (KeyError, TypeError, ValueError, ConsistencyError):
                            dropped += 1
                            continue
                        entries[n] = w
            except OSError as exc:
                log.warning("cannot read cache %s: %s", self.path, exc)
        if dropped:
            log.warning("discarded %d invalid cache entries from %s", dropped, self.path)
        self._entries = entries
        return entries

    def get(self, n: int) -> ApWitness | None:
        return self._load().get(n)

    def put(self, w: ApWitness) -> None:
        entries = self._load()
        if entries.get(w.n) != w:
            entries[w.n] = w
            self._dirty = True

    def __len__(self) -> int:
        return len(self._load())

    def save(self) -> bool:
        """Write the cache atomically; returns False (with a warning) on failure."""
        if not self._dirty:
            return True
        entries = self._load()
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".cache-", suffix=".csv")
            with os.fdopen(fd, "w", newline="") as fh:
                fh.write(",".join(CACHE_FIELDS) + "\n")
                for n in sorted(entries):
                    w = entries[n]
                    fh.write(f"{n},{w.length},{w.first},{w.difference},{w.length}\n")
            os.replace(tmp, self.path)
        except OSError as exc:
            log.warning("cannot write cache %s: %s; continuing uncached", self.path, exc)
            return False
        self._dirty = False
        return True
