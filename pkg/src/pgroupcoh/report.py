"""Structured pass/fail records for the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

__all__ = ["Assertion", "VerificationReport"]

PROVENANCE = ("PAPER", "DERIVED", "TRIVIAL", "SELF-CHECK")


@dataclass
class Assertion:
    id: str
    anchor: str
    provenance: str
    expected: Any
    computed: Any
    passed: bool
    witness: dict | None = None
    note: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "provenance": self.provenance,
               "expected": self.expected, "computed": self.computed, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    suite: str
    group: str = ""
    p: int | None = None
    n: int | None = None
    cutoff: int | None = None
    assertions: list[Assertion] = field(default_factory=list)
    normalization: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def add(self, id: str, anchor: str, provenance: str, expected, computed, passed: bool,
            witness: dict | None = None, note: str = "") -> Assertion:
        if provenance not in PROVENANCE:
            raise ValueError(f"unknown provenance {provenance}")
        a = Assertion(id, anchor, provenance, expected, computed, bool(passed), witness, note)
        self.assertions.append(a)
        return a

    @property
    def ok(self) -> bool:
        return all(a.passed for a in self.assertions)

    @property
    def failures(self) -> list[Assertion]:
        return [a for a in self.assertions if not a.passed]

    def __getitem__(self, id: str) -> Assertion:
        for a in self.assertions:
            if a.id == id:
                return a
        raise KeyError(id)

    def ids(self) -> list[str]:
        return [a.id for a in self.assertions]

    def to_json(self, timings: bool = False) -> dict:
        out = {"suite": self.suite, "group": self.group, "p": self.p, "n": self.n,
               "cutoff": self.cutoff, "status": "pass" if self.ok else "fail",
               "assertions": [a.to_json() for a in self.assertions],
               "normalization": self.normalization}
        if self.notes:
            out["notes"] = self.notes
        if timings:
            out["timings"] = self.timings
        return out

    def dumps(self, timings: bool = False) -> str:
        return json.dumps(self.to_json(timings), indent=2, sort_keys=True)

    def summary_lines(self) -> list[str]:
        head = f"[{self.suite}] {self.group}: {sum(a.passed for a in self.assertions)}/{len(self.assertions)} pass"
        lines = [head]
        for a in self.assertions:
            lines.append(f"  {a.status.upper():4} {a.id}: computed {a.computed} (expected {a.expected})")
        return lines
