"""Shared pytest wiring: one visible verdict line per acceptance check."""

from __future__ import annotations


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if report.passed:
        verdict = "PASS"
    elif report.failed:
        verdict = "FAIL"
    else:
        verdict = "SKIP"
    print(f"\n[acceptance] {verdict} {name}", flush=True)
