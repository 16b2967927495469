import pytest

_criteria: dict[tuple[str, str], str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the terminal summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = (marker.args[0], item.name)
    if report.when == "call" or report.failed:
        if _criteria.get(key) != "FAIL":
            _criteria[key] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, name in sorted(_criteria, key=lambda k: (int(k[0][0]), k)):
        terminalreporter.write_line(f"{_criteria[label, name]}  criterion {label:<3} {name}")
