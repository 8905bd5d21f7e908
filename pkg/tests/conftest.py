import re
from collections import defaultdict

import pytest

from quatpoly import constructions
from quatpoly.checks import ACCEPTANCE_CRITERIA

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")
_outcomes: dict = defaultdict(list)


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[int(m.group(1))].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k, title in ACCEPTANCE_CRITERIA.items():
        got = _outcomes.get(k)
        if not got:
            status = "NOT RUN"
        elif all(o == "passed" for o in got):
            status = "PASS"
        else:
            status = "FAIL"
        tr.write_line(f"criterion {k:>2} {title:<42} {status} ({got.count('passed') if got else 0}/{len(got or [])} tests)")


@pytest.fixture
def fresh_caches():
    constructions.clear_caches()
    yield
    constructions.clear_caches()
