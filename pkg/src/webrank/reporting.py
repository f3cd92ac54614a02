"""Deterministic pass/fail reports shared by the verify suites and CLI.

Values are serialized as exact rationals ("p/q" strings or integers);
JSON output is byte-identical for a fixed seed and config (sorted keys,
no timestamps, no floats).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .polyhedra import frac_to_str


def _jsonable(v):
    if isinstance(v, Fraction):
        return frac_to_str(v)
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in sorted(v.items(), key=lambda kv: str(kv[0]))}
    return str(v)


@dataclass
class ReportEntry:
    name: str
    status: str                  # "pass" | "fail" | "assumed" | "info"
    expected: object = None
    computed: object = None
    detail: str = ""
    certificate: dict | None = None

    def to_json(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.expected is not None:
            d["expected"] = _jsonable(self.expected)
        if self.computed is not None:
            d["computed"] = _jsonable(self.computed)
        if self.detail:
            d["detail"] = self.detail
        if self.certificate is not None:
            d["certificate"] = _jsonable(self.certificate)
        return d


@dataclass
class Report:
    suite: str
    config: dict = field(default_factory=dict)
    entries: list = field(default_factory=list)

    def add(self, name, status, expected=None, computed=None, detail="",
            certificate=None) -> ReportEntry:
        e = ReportEntry(name, status, expected, computed, detail, certificate)
        self.entries.append(e)
        return e

    def check(self, name, expected, computed, detail="", certificate=None):
        status = "pass" if expected == computed else "fail"
        return self.add(name, status, expected, computed, detail, certificate)

    @property
    def failures(self) -> list:
        return [e for e in self.entries if e.status == "fail"]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "config": _jsonable(self.config),
            "passed": self.passed,
            "counts": {
                "pass": sum(1 for e in self.entries if e.status == "pass"),
                "fail": len(self.failures),
                "assumed": sum(1 for e in self.entries if e.status == "assumed"),
                "info": sum(1 for e in self.entries if e.status == "info"),
            },
            "entries": [e.to_json() for e in self.entries],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def to_table(self) -> str:
        """Human-readable table; rational values rendered exactly."""
        width = max([len(e.name) for e in self.entries] + [4])
        lines = [f"suite: {self.suite}"]
        if self.config:
            lines.append("config: " + ", ".join(f"{k}={v}" for k, v in sorted(self.config.items())))
        for e in self.entries:
            cols = [e.name.ljust(width), e.status.upper().ljust(7)]
            if e.expected is not None or e.computed is not None:
                cols.append(f"expected={_fmt(e.expected)} computed={_fmt(e.computed)}")
            if e.detail:
                cols.append(e.detail)
            lines.append("  ".join(cols).rstrip())
        ok = "PASS" if self.passed else "FAIL"
        lines.append(f"result: {ok} ({len(self.entries)} checks, {len(self.failures)} failures)")
        return "\n".join(lines)


def _fmt(v):
    if isinstance(v, Fraction):
        return frac_to_str(v)
    return str(v)
