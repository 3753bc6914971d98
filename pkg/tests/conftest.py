"""Shared fixtures plus the acceptance summary hook.

The acceptance tests in test_acceptance.py each cover one numbered
criterion; after the run, a summary section repeats one PASS/FAIL line per
criterion so the result is visible at a glance in captured output.
"""

import re
from pathlib import Path

import pytest

from tribrackets.knotdata import bundled_table
from tribrackets.tables import load_structure, virtual_alexander

DATA = Path(__file__).resolve().parents[1] / "src" / "tribrackets" / "data"

_ACCEPTANCE = {}
_CRITERION = re.compile(r"test_c(\d+)")


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    m = _CRITERION.search(report.nodeid)
    if m:
        _ACCEPTANCE[int(m.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        ok = _ACCEPTANCE[n] == "passed"
        terminalreporter.write_line(
            "criterion %2d: %s" % (n, "PASS" if ok else "FAIL")
        )


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def table3():
    s = load_structure(DATA / "table3.tri")
    s.name = "table3"
    return s


@pytest.fixture(scope="session")
def table4():
    s = load_structure(DATA / "table4.tri")
    s.name = "table4"
    return s


@pytest.fixture(scope="session")
def ex3():
    s = load_structure(DATA / "ex3.tri")
    s.name = "ex3"
    return s


@pytest.fixture(scope="session")
def hopf3():
    s = load_structure(DATA / "hopf3.tri")
    s.name = "hopf3"
    return s


@pytest.fixture(scope="session")
def orient4():
    s = load_structure(DATA / "orient4.tri")
    s.name = "orient4"
    return s


@pytest.fixture(scope="session")
def va312():
    return virtual_alexander(3, 1, 2, 2)


@pytest.fixture(scope="session")
def knots():
    return bundled_table()
