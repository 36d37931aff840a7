"""Selftest metrics: per-suite outcomes and the aggregated report.

Each oracle suite runs a batch of cases against an independent checker and
reports how many it ran, how many failed and how long it took.
"""

from __future__ import annotations

import json
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional


@dataclass
class SuiteResult:
    """Result of a single oracle suite.

    Attributes:
        suite_id: Unique identifier (e.g., 'bit_extension').
        name: Human-readable suite name.
        category: Module the suite exercises (orders, graphs, hf, backforth, ba, cli).
        passed: Whether every case agreed with the oracle.
        cases: Number of cases checked.
        failures: Number of cases that disagreed.
        elapsed_seconds: Wall-clock time of the suite.
        detail: Short free-form note (first failure, counts of partial runs).
        error: Error description if the suite crashed.
    """
    suite_id: str
    name: str
    category: str = "orders"
    passed: bool = False
    cases: int = 0
    failures: int = 0
    elapsed_seconds: float = 0.0
    detail: str = ""
    error: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON export."""
        return {
            "suite_id": self.suite_id,
            "name": self.name,
            "category": self.category,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "detail": self.detail,
            "error": self.error,
        }


@dataclass
class SelftestReport:
    """Aggregated outcome of a selftest run.

    Example:
        >>> report = SelftestReport(scale="quick")
        >>> report.add_result(SuiteResult("s1", "BIT extension", passed=True, cases=40))
        >>> print(report.summary())
    """
    results: list[SuiteResult] = field(default_factory=list)
    scale: str = "quick"
    seed: int = 0
    timestamp: float = field(default_factory=time.time)

    def add_result(self, result: SuiteResult) -> None:
        self.results.append(result)

    # ── Core Metrics ─────────────────────────────────────────────────

    @property
    def ok(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    @property
    def pass_rate(self) -> float:
        if not self.results:
            return 0.0
        return sum(1 for r in self.results if r.passed) / len(self.results)

    @property
    def total_cases(self) -> int:
        return sum(r.cases for r in self.results)

    @property
    def total_failures(self) -> int:
        return sum(r.failures for r in self.results)

    @property
    def total_time(self) -> float:
        return sum(r.elapsed_seconds for r in self.results)

    @property
    def mean_time(self) -> float:
        """Mean suite time in seconds."""
        if not self.results:
            return 0.0
        return statistics.mean(r.elapsed_seconds for r in self.results)

    # ── Category Breakdown ───────────────────────────────────────────

    def pass_rate_by_category(self) -> dict[str, float]:
        categories: dict[str, list[bool]] = {}
        for r in self.results:
            categories.setdefault(r.category, []).append(r.passed)
        return {cat: sum(flags) / len(flags) for cat, flags in categories.items()}

    def failed(self) -> list[SuiteResult]:
        return [r for r in self.results if not r.passed]

    # ── Reporting ────────────────────────────────────────────────────

    def summary(self) -> str:
        """Generate a text summary of the run."""
        lines = [
            f"═══ Selftest ({self.scale}, seed {self.seed}) ═══",
            f"Suites: {len(self.results)}",
            "",
            "── Core Metrics ──",
            f"  Pass Rate:   {self.pass_rate:.1%}",
            f"  Cases:       {self.total_cases}",
            f"  Failures:    {self.total_failures}",
            f"  Total Time:  {self.total_time:.2f}s",
        ]

        categories = self.pass_rate_by_category()
        if categories:
            lines.append("\n── By Category ──")
            for cat, rate in sorted(categories.items()):
                count = sum(1 for r in self.results if r.category == cat)
                lines.append(f"  {cat:12s}: {rate:.1%} ({count} suites)")

        failed = self.failed()
        if failed:
            lines.append("\n── Failures ──")
            for r in failed:
                lines.append(f"  {r.suite_id:24s}: {r.error or r.detail}")

        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "scale": self.scale,
            "seed": self.seed,
            "timestamp": self.timestamp,
            "summary": {
                "ok": self.ok,
                "total_suites": len(self.results),
                "pass_rate": round(self.pass_rate, 4),
                "total_cases": self.total_cases,
                "total_failures": self.total_failures,
                "total_time_seconds": round(self.total_time, 3),
            },
            "by_category": {
                cat: round(rate, 4) for cat, rate in self.pass_rate_by_category().items()
            },
            "results": [r.to_dict() for r in self.results],
        }

    def save_json(self, path: str) -> str:
        """Save the report to a JSON file.

        Args:
            path: Output file path.

        Returns:
            Path to saved file.
        """
        output = Path(path)
        output.parent.mkdir(parents=True, exist_ok=True)
        with open(output, "w") as f:
            json.dump(self.to_dict(), f, indent=2)
        return str(output)

    def to_markdown_table(self) -> str:
        """One row per suite."""
        lines = [
            "| Suite | Category | Result | Cases | Time |",
            "|-------|----------|--------|-------|------|",
        ]
        for r in self.results:
            mark = "pass" if r.passed else "FAIL"
            lines.append(
                f"| {r.name} | {r.category} | {mark} | {r.cases} | {r.elapsed_seconds:.2f}s |"
            )
        return "\n".join(lines)
