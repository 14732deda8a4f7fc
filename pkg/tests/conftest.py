import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the outcome is printed in the summary."""
    entry = {"label": request.node.get_closest_marker("criterion").args[0], "ok": False}
    _ACCEPTANCE.append(entry)
    yield entry
    entry["ok"] = True


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call" and report.failed:
        for entry in _ACCEPTANCE:
            if entry["label"] == marker.args[0]:
                entry["failed"] = True


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _ACCEPTANCE:
        ok = entry["ok"] and not entry.get("failed")
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {entry['label']}")
