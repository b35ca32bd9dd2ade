from __future__ import annotations

import pytest

CRITERIA = {
    1: "oracle equivalence on random bundles",
    2: "closed forms of f at weights k-1, k, k+1",
    3: "positivity scan",
    4: "family slopes and Pontryagin q-independence",
    5: "q-linearity of family Chern numbers",
    6: "only the (n-1,1) coordinate of X_q moves",
    7: "rank of the ideal I and the complementary bound",
    8: "alpha-monomial basis and Milnor numbers",
    9: "chi_y genus machinery",
    10: "span corollaries",
    11: "ideal comparison and vanishing on J",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    criterion = getattr(report, "criterion", None)
    if criterion is not None:
        _outcomes.setdefault(criterion, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status:7s} {title}")
