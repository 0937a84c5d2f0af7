"""Verification reports: per-identity case counts and the first counterexample."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class IdentityResult:
    identity: str
    cases: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, witness: dict[str, Any] | None = None, keep: int = 1) -> None:
        self.cases += 1
        if not ok and len(self.failures) < keep:
            self.failures.append(witness or {})

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"identity": self.identity, "cases": self.cases, "failures": self.failures}
        if self.notes:
            out["notes"] = self.notes
        return out


@dataclass
class Report:
    suite: str
    parameters: dict[str, Any]
    results: list[IdentityResult] = field(default_factory=list)
    findings: list[dict[str, Any]] = field(default_factory=list)
    # per-case data kept whether or not the case passed (e.g. coloring ledgers)
    records: list[dict[str, Any]] = field(default_factory=list)

    def identity(self, name: str) -> IdentityResult:
        for r in self.results:
            if r.identity == name:
                return r
        r = IdentityResult(name)
        self.results.append(r)
        return r

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict[str, Any]:
        out = {
            "suite": self.suite,
            "parameters": self.parameters,
            "passed": self.passed,
            "results": [r.to_json() for r in self.results],
            "findings": self.findings,
        }
        if self.records:
            out["records"] = self.records
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False)

    def render(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        lines = [f"suite {self.suite}: {params}"]
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            lines.append(f"  {status:4}  {r.identity}  ({r.cases} cases)")
            for note in r.notes:
                lines.append(f"        note: {note}")
            for w in r.failures:
                for k, v in sorted(w.items()):
                    lines.append(f"        {k}: {v}")
        for rec in self.records:
            lines.extend(_render_record(rec))
        for f in self.findings:
            lines.append("  finding: " + json.dumps(f, sort_keys=True, ensure_ascii=False))
        lines.append("overall: " + ("pass" if self.passed else "FAIL"))
        return "\n".join(lines)



def _render_record(rec: dict[str, Any]) -> list[str]:
    if "word" not in rec or "ledger" not in rec:
        return ["  record: " + json.dumps(rec, sort_keys=True, ensure_ascii=False)]
    status = "holds" if rec.get("identity_holds") else "fails"
    lines = [f"  word {rec['word']}: identity {status}; {len(rec['ledger'])} cutting coloring(s)"]
    for e in rec["ledger"]:
        sign = "+" if e["sign"] > 0 else "-"
        lines.append(
            f"    cuts={e['cuts']} colors={e['colors']} sign={sign} h^{e['exponent']}"
            f" (literal h^{e['exponent_literal']}) -> {e['term']}"
        )
    return lines
