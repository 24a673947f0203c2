"""Uniform pass/fail reporting for the verification harnesses."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    title: str
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def passed_count(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            if c.detail:
                out.append(f"{self.title}: {c.label}: {status} ({c.detail})")
            else:
                out.append(f"{self.title}: {c.label}: {status}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def merge(title: str, reports: list[Report]) -> Report:
    checks = []
    for r in reports:
        checks.extend(r.checks)
    return Report(title, tuple(checks))
