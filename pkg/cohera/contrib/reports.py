from collections import Counter
from typing import Any, Optional

from cohera.contrib.schemas import Failure, Finding, Report


def _text(value: Any) -> str:
    describe = getattr(value, 'describe', None)
    if callable(describe):
        return describe()
    return str(value)


class SuiteRecorder:
    """Accumulates check outcomes for one suite and freezes them into a Report.

    Failures and findings are sorted on build, so the order in which checks ran
    never shows up in the serialized report.
    """

    def __init__(self, suite: str, scope: Optional[str] = None):
        self.suite = suite
        self.scope = scope
        self.attempted = 0
        self.passed = 0
        self.skipped = 0
        self.counts: Counter = Counter()
        self._failures: list[Failure] = []
        self._findings: dict[str, list[Any]] = {}

    def check(self, law: str, ok: bool, witness: Any = None, **inputs: Any) -> bool:
        self.attempted += 1
        self.counts[law] += 1
        if ok:
            self.passed += 1
        else:
            self._failures.append(Failure(
                law=law,
                inputs={k: _text(v) for k, v in inputs.items()},
                witness=None if witness is None else _text(witness),
            ))
        return ok

    def skip(self, law: str, count: int = 1) -> None:
        self.attempted += count
        self.skipped += count
        self.counts[f'{law}:skipped'] += count

    def explore(self, law: str, holds: bool, **inputs: Any) -> None:
        entry = self._findings.setdefault(law, [0, 0, None])
        entry[0] += 1
        if not holds:
            entry[1] += 1
            if entry[2] is None:
                entry[2] = {k: _text(v) for k, v in inputs.items()}

    def merge(self, report: Report) -> None:
        self.attempted += report.attempted
        self.passed += report.passed
        self.skipped += report.skipped
        self.counts.update(report.counts)
        self._failures.extend(report.failures)
        for finding in report.exploratory:
            entry = self._findings.setdefault(finding.law, [0, 0, None])
            entry[0] += finding.checked
            entry[1] += finding.counterexamples
            if entry[2] is None:
                entry[2] = finding.example

    def build(self) -> Report:
        failures = sorted(
            self._failures,
            key=lambda f: (f.law, sorted(f.inputs.items()), f.witness or ''),
        )
        findings = [
            Finding(law=law, checked=checked, counterexamples=bad, example=example)
            for law, (checked, bad, example) in sorted(self._findings.items())
        ]
        return Report(
            suite=self.suite,
            attempted=self.attempted,
            passed=self.passed,
            skipped=self.skipped,
            failures=failures,
            exploratory=findings,
            counts=dict(sorted(self.counts.items())),
            scope=self.scope,
        )
