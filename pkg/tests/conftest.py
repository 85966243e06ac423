import pytest

ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body fills in ``detail``."""
    entry = {"name": request.node.name, "detail": ""}
    ACCEPTANCE.append(entry)
    yield entry


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        for entry in ACCEPTANCE:
            if entry["name"] == item.name:
                entry["passed"] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for entry in ACCEPTANCE:
        status = "PASS" if entry.get("passed") else "FAIL"
        terminalreporter.write_line(f"{status}  {entry['name']}  {entry['detail']}")
