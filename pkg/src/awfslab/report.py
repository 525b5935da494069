"""Check reports: named verdicts with concrete witnesses.

A report with no failing entries and no partiality flag is a full pass for
its fragment.  Conclusions are always fragment-relative; the bounds dict
records whatever was capped or sampled.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Entry:
    check: str
    ok: bool
    witness: str = ""


@dataclass
class Report:
    subject: str
    entries: list[Entry] = field(default_factory=list)
    bounds: dict = field(default_factory=dict)
    partial: bool = False
    seed: int | None = None

    def record(self, check: str, ok: bool, witness: str = "") -> None:
        self.entries.append(Entry(check, bool(ok), "" if ok else witness))

    def merge(self, other: "Report") -> None:
        self.entries.extend(other.entries)
        self.partial = self.partial or other.partial
        self.bounds.update(other.bounds)

    def failures(self) -> list[Entry]:
        return [e for e in self.entries if not e.ok]

    @property
    def ok(self) -> bool:
        return not self.failures() and not self.partial

    def summary(self) -> str:
        status = "PASS" if self.ok else ("PARTIAL" if not self.failures() else "FAIL")
        lines = [f"[{status}] {self.subject}: {len(self.entries)} checks, "
                 f"{len(self.failures())} failures"]
        for e in self.failures()[:10]:
            lines.append(f"    FAIL {e.check}: {e.witness}")
        if self.partial:
            lines.append(f"    partial: {self.bounds}")
        return "\n".join(lines)

    def to_doc(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "partial": self.partial,
            "bounds": {k: str(v) for k, v in self.bounds.items()},
            "seed": self.seed,
            "entries": [
                {"check": e.check, "ok": e.ok, "witness": e.witness}
                for e in self.entries
            ],
        }
