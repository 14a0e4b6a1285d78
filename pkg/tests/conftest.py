from __future__ import annotations

import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results: dict = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or "test_acceptance.py" not in report.nodeid:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.outcome != "passed":
        prev = _results.get(key)
        if prev != "FAIL":
            _results[key] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), status in sorted(_results.items()):
        terminalreporter.write_line(f"criterion {num:2d} {name.replace('_', ' ')}: {status}")
