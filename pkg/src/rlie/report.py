"""Check reports: verifiers record per-clause verdicts instead of raising."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    mode: str = "exact"  # "exact" | "exhaustive" | "sampled"
    detail: str = ""


@dataclass
class Report:
    subject: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, passed: bool, mode: str = "exact", detail: str = ""):
        self.checks.append(Check(name, bool(passed), mode, detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "notes": sorted(self.notes),
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "mode": c.mode,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }

    def text_lines(self) -> list[str]:
        lines = [f"{self.subject}: {'pass' if self.ok else 'FAIL'}"]
        for note in self.notes:
            lines.append(f"  note: {note}")
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            mode = "" if c.mode == "exact" else f" [{c.mode}]"
            detail = f" ({c.detail})" if c.detail else ""
            lines.append(f"  {c.name}: {status}{mode}{detail}")
        return lines
