"""Verification reports: one record per check, assembled in a deterministic order."""
import json
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

import pandas as pd

from src.errors import VerificationFailed


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one check.

    `witness` is the offending input (a word, a word pair or a tensor key) and
    `detail` the printed residual it produces; re-evaluating the check on the
    witness reproduces the residual.
    """

    suite: str
    check: str
    params: str
    passed: bool
    witness: Optional[object] = None
    detail: str = ""

    @property
    def sort_key(self):
        return (self.suite, self.check, self.params)

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        text = f"  [{status}] {self.check} ({self.params})"
        if not self.passed:
            text += f"\n         witness {self.witness!s}: {self.detail}"
        return text


@dataclass
class VerifyReport:
    subject: str
    records: List[CheckRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> List[CheckRecord]:
        return [r for r in self.sorted_records() if not r.passed]

    def add(
        self,
        suite: str,
        check: str,
        params: str,
        passed: bool,
        witness: Optional[object] = None,
        detail: str = "",
    ) -> CheckRecord:
        record = CheckRecord(suite, check, params, passed, witness, detail)
        self.records.append(record)
        return record

    def extend(self, other: "VerifyReport") -> "VerifyReport":
        self.records.extend(other.records)
        return self

    def suites(self) -> List[str]:
        return sorted({r.suite for r in self.records})

    def suite_ok(self, suite: str) -> bool:
        return all(r.passed for r in self.records if r.suite == suite)

    def sorted_records(self) -> List[CheckRecord]:
        return sorted(self.records, key=lambda r: r.sort_key)

    def summary_lines(self) -> List[str]:
        return [f"{suite}: {'pass' if self.suite_ok(suite) else 'FAIL'}" for suite in self.suites()]

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"{self.subject}: {'pass' if self.ok else 'FAIL'}"]
        for suite in self.suites():
            lines.append(f"{suite}: {'pass' if self.suite_ok(suite) else 'FAIL'}")
            for record in self.sorted_records():
                if record.suite == suite and (verbose or not record.passed):
                    lines.append(record.line())
        return "\n".join(lines)

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "subject": self.subject,
                "suite": r.suite,
                "check": r.check,
                "params": r.params,
                "passed": r.passed,
                "witness": "" if r.witness is None else str(r.witness),
                "detail": r.detail,
            }
            for r in self.sorted_records()
        ]
        columns = ["subject", "suite", "check", "params", "passed", "witness", "detail"]
        return pd.DataFrame(rows, columns=columns)

    def to_records(self) -> str:
        """JSON lines, one object per check."""
        frame = self.to_frame()
        if frame.empty:
            return json.dumps({"subject": self.subject, "passed": True, "checks": 0})
        return frame.to_json(orient="records", lines=True, force_ascii=False).strip()

    def require(self) -> "VerifyReport":
        if not self.ok:
            first = self.failures[0]
            raise VerificationFailed(f"{self.subject}: {first.suite} / {first.check} failed", self)
        return self

    def __str__(self) -> str:
        return self.to_text()


def merge_reports(subject: str, reports: Iterable[VerifyReport]) -> VerifyReport:
    merged = VerifyReport(subject)
    for report in reports:
        merged.extend(report)
    return merged
