"""Pass/fail reports produced by the identity verifiers.

A report keeps every intermediate value, not just a boolean, so a failure
can be diagnosed straight from printed output.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """One verified equality: label plus expected and observed values."""

    label: str
    expected: object
    observed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    def add(self, label: str, expected: object, observed: object) -> None:
        self.checks.append(Check(label, expected, observed))

    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.ok]

    def lines(self, verbose: bool = False) -> list[str]:
        """Stable text rendering: failures always shown, passes only if verbose."""
        status = "PASS" if self.ok else "FAIL"
        out = [f"{status} {self.title} ({len(self.checks)} checks)"]
        for check in self.checks if verbose else self.failures():
            mark = "ok" if check.ok else "MISMATCH"
            out.append(f"  {mark} {check.label}: expected {check.expected}, got {check.observed}")
        out.extend(f"  note: {note}" for note in self.notes)
        return out
