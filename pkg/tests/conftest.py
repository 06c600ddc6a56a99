import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(number, title): exit criterion reported in the summary"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    detail = ""
    if report.failed:
        detail = str(report.longrepr.reprcrash.message).splitlines()[0] if report.longrepr else ""
    _RESULTS[number] = (title, report.passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok, detail = _RESULTS[number]
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  -- {detail[:160]}"
        terminalreporter.write_line(line)
