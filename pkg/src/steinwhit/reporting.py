"""Shared result records for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["CheckResult", "all_passed", "as_dicts"]


@dataclass(frozen=True)
class CheckResult:
    """One named identity check: what was verified and whether it held."""

    name: str
    passed: bool
    detail: str = ""


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)


def as_dicts(results: list[CheckResult]) -> list[dict]:
    return [
        {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
    ]
