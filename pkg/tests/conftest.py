import pytest

from catalancode.table import build_table


@pytest.fixture(scope="session")
def table():
    return build_table(60)


@pytest.fixture(scope="session")
def big_table():
    return build_table(500)


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title = marker.args
    passed, _ = _criteria.get(number, (True, title))
    if report.failed or (report.when == "call" and report.skipped):
        passed = False
    _criteria[number] = (passed, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        passed, title = _criteria[number]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  AC{number:>2}  {title}")
