import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_acceptance: list[tuple[str, str, bool]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion; reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _acceptance.append((*marker.args, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(_acceptance, key=lambda r: int(r[0])):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}")
