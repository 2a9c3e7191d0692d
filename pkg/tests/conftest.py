import pytest

_criteria: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.name.startswith("test_criterion_"):
        if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
            _criteria[item.name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        number, _, label = name[len("test_criterion_"):].partition("_")
        terminalreporter.write_line(f"criterion {int(number):2d} {_criteria[name]}  {label.replace('_', ' ')}")
