import warnings

import pytest

from qcrc import QcrcWarning, build_qcrc, build_structured
from qcrc.fast_decoder import structured_poly

_criteria: dict[str, list[str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            _criteria.setdefault(marker.args[0], [])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _criteria.setdefault(marker.args[0], []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")

    def order(name):
        return int(name.split()[0].lstrip("AC"))

    for name in sorted(_criteria, key=order):
        outcomes = _criteria[name]
        if not outcomes:
            status = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"{status:7s} {name}  ({len(outcomes)} check(s))")


def _quiet_qcrc(g, n, l=None):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", QcrcWarning)
        return build_qcrc(g, n, l)


@pytest.fixture(scope="session")
def code_5_1():
    return build_qcrc(structured_poly(5, 1), 5, 1)


@pytest.fixture(scope="session")
def code_9_1():
    return build_qcrc(structured_poly(9, 1), 9, 2)


@pytest.fixture(scope="session")
def code_18_2():
    return build_structured(9, 2, 2)


@pytest.fixture(scope="session")
def code_35_7():
    return build_structured(5, 1, 7)


@pytest.fixture(scope="session")
def quiet_qcrc():
    return _quiet_qcrc
