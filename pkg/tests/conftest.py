import pytest

_acceptance: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(tag, title): exit criterion of the package")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    tag, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _acceptance[tag] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(_acceptance, key=lambda t: int(t[2:])):
        title, status = _acceptance[tag]
        terminalreporter.write_line(f"{status}  {tag:5} {title}")
