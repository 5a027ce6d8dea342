"""
Verification reports.

Every check produces one ReportEntry:
- check_id: stable identifier, e.g. "P2.1-x4" or "A-B9"
- anchor: where the identity is stated
- status: pass / fail
- engine: how it was decided (exact-B6, matrix-shadow, both, mod-N-witness)
- counterexample: the failing sample and evaluated sides, when status is fail

A VerificationReport keeps entries in the order they were added and renders
them as a text banner report or as JSON lines (one header record, then one
record per entry). Nothing time-dependent is written, so the same run always
produces the same bytes.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"


class Engine(Enum):
    """How a check was decided."""

    EXACT_B6 = "exact-B6"
    MATRIX_SHADOW = "matrix-shadow"
    BOTH = "both"
    MOD_N_WITNESS = "mod-N-witness"


@dataclass
class ReportEntry:
    """Outcome of a single identity check."""

    check_id: str
    anchor: str
    status: CheckStatus
    engine: Engine
    counterexample: Optional[Dict[str, Any]] = None
    suite: str = ""  # not serialized

    @classmethod
    def outcome(
        cls,
        check_id: str,
        anchor: str,
        passed: bool,
        engine: Engine,
        counterexample: Optional[Dict[str, Any]] = None,
    ) -> "ReportEntry":
        """Build an entry from a boolean, keeping the counterexample only on failure."""
        return cls(
            check_id=check_id,
            anchor=anchor,
            status=CheckStatus.PASS if passed else CheckStatus.FAIL,
            engine=engine,
            counterexample=None if passed else counterexample,
        )

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "status": self.status.value,
            "engine": self.engine.value,
            "counterexample": self.counterexample,
        }


@dataclass
class VerificationReport:
    """
    Ordered collection of report entries plus the run header.

    Usage:
        report = VerificationReport(header=config.header())
        report.extend(entries)
        print(report.generate_text())
        report.save("report.jsonl", "structured")
    """

    header: Dict[str, Any] = field(default_factory=dict)
    entries: List[ReportEntry] = field(default_factory=list)

    def add(self, entry: ReportEntry):
        self.entries.append(entry)

    def extend(self, entries: Iterable[ReportEntry]):
        self.entries.extend(entries)

    @property
    def failures(self) -> List[ReportEntry]:
        return [entry for entry in self.entries if not entry.passed]

    @property
    def all_passed(self) -> bool:
        return not self.failures

    def summary(self) -> Dict[str, Any]:
        """Counts of entries overall and per engine tag."""
        engines = {engine.value: 0 for engine in Engine}
        for entry in self.entries:
            engines[entry.engine.value] += 1
        return {
            "total": len(self.entries),
            "passed": sum(1 for entry in self.entries if entry.passed),
            "failed": len(self.failures),
            "engines": engines,
        }

    def generate_text(self) -> str:
        """Human-readable report."""
        lines = [
            "=" * 60,
            "STEINBRAID VERIFICATION REPORT",
            "=" * 60,
            "",
        ]
        lines.extend(f"{key}: {_plain(value)}" for key, value in self.header.items())
        lines.append("")

        s = self.summary()
        engine_counts = ", ".join(
            f"{count} {name}" for name, count in s["engines"].items() if count
        )
        lines.extend(
            [
                f"Checks: {s['total']} ({s['passed']} pass, {s['failed']} fail)",
                f"Engines: {engine_counts or 'none'}",
                "",
            ]
        )

        current_suite = None
        for entry in self.entries:
            if entry.suite and entry.suite != current_suite:
                current_suite = entry.suite
                lines.append(f"--- {current_suite.upper()} ---")
            status = "PASS" if entry.passed else "FAIL"
            lines.append(
                f"  [{status}] {entry.check_id:<28} {entry.engine.value:<14} {entry.anchor}"
            )

        if self.failures:
            lines.extend(["", "--- FAILURES ---"])
            for entry in self.failures:
                lines.append(f"  {entry.check_id}:")
                for key, value in (entry.counterexample or {}).items():
                    lines.append(f"      {key}: {_plain(value)}")
        lines.append("")
        return "\n".join(lines)

    def to_jsonl(self) -> str:
        """Header record followed by one record per entry."""
        records = [{"header": self.header}] + [entry.to_dict() for entry in self.entries]
        return "".join(json.dumps(record) + "\n" for record in records)

    def render(self, output_format: str) -> str:
        return self.to_jsonl() if output_format == "structured" else self.generate_text()

    def save(self, filepath: str, output_format: str = "structured"):
        """Save report to file."""
        Path(filepath).parent.mkdir(parents=True, exist_ok=True)
        with open(filepath, "w") as f:
            f.write(self.render(output_format))


def _plain(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(str(item) for item in value)
    return str(value)
