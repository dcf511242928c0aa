"""Collect acceptance results and print one PASS/FAIL line per criterion."""

import pytest

_results: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, title = marker.args
    entry = _results.setdefault(n, {"title": title, "tests": 0, "failed": 0})
    if report.when == "call":
        entry["tests"] += 1
    if report.failed or (report.when == "call" and report.skipped):
        entry["failed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        r = _results[n]
        verdict = "PASS" if r["failed"] == 0 and r["tests"] > 0 else "FAIL"
        terminalreporter.write_line(f"{verdict} criterion {n}: {r['title']} ({r['tests']} tests, {r['failed']} failed)")
