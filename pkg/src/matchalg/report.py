"""Failure certificates shared by every axiom checker.

A report is a list of failures, one per identity instance that does not hold.
Each failure records the identity name, the basis multi-index (with
human-readable basis names and labels) and both sides' coefficient vectors,
so a failing run can be reproduced and diffed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from matchalg.linalg import format_scalar


@dataclass(frozen=True)
class Failure:
    identity: str
    index: tuple
    lhs: tuple
    rhs: tuple

    def to_json(self):
        return {
            "identity": self.identity,
            "index": list(self.index),
            "lhs": [format_scalar(c) for c in self.lhs],
            "rhs": [format_scalar(c) for c in self.rhs],
        }


@dataclass
class CertificateReport:
    title: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, identity, index, lhs, rhs):
        """Compare coefficient vectors; file a failure when they differ."""
        self.checked += 1
        if list(lhs) != list(rhs):
            self.failures.append(Failure(identity, tuple(index), tuple(lhs), tuple(rhs)))

    def merge(self, other: "CertificateReport") -> "CertificateReport":
        self.checked += other.checked
        self.failures.extend(other.failures)
        for key, value in other.notes.items():
            self.notes.setdefault(key, value)
        return self

    def to_json(self):
        payload = {
            "title": self.title,
            "passed": self.passed,
            "checked": self.checked,
            "failures": [f.to_json() for f in self.failures],
        }
        if self.notes:
            payload["notes"] = self.notes
        return payload

    def summary(self) -> str:
        state = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.title}: {state} [{self.checked} identities checked]"
