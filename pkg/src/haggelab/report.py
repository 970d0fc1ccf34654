"""Machine-readable verification results and their canonical JSON form."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class Check:
    name: str
    anchor: str
    passed: bool
    detail: Optional[dict] = None

    def to_json(self) -> dict:
        out = {"name": self.name, "anchor": self.anchor, "pass": bool(self.passed)}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class CheckReport:
    """Results for one configuration."""

    suite: str
    instance: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    backend: str = "rational"
    records: dict = field(default_factory=dict)
    error: Optional[str] = None

    def add(self, name: str, anchor: str, passed: bool, **detail: Any) -> Check:
        c = Check(name, anchor, bool(passed), detail or None)
        self.checks.append(c)
        return c

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list:
        return [c.name for c in self.checks]

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "instance": self.instance,
            "checks": [c.to_json() for c in self.checks],
            "backend": self.backend,
            "pass": self.passed,
        }
        if self.records:
            out["records"] = self.records
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class SuiteReport:
    """Results for a seeded batch of instances, ordered by instance index."""

    suite: str
    seed: int
    backend: str
    reports: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def counterexamples(self) -> list:
        return [
            {"index": i, "instance": r.instance, "failed": [c.name for c in r.failures()], "error": r.error}
            for i, r in enumerate(self.reports)
            if not r.passed
        ]

    def to_json(self) -> dict:
        n_fail = sum(1 for r in self.reports if not r.passed)
        return {
            "suite": self.suite,
            "seed": self.seed,
            "backend": self.backend,
            "instances": [dict(r.to_json(), index=i) for i, r in enumerate(self.reports)],
            "counterexamples": self.counterexamples(),
            "summary": {"instances": len(self.reports), "failed": n_fail, "pass": n_fail == 0},
        }


def dumps(data) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
