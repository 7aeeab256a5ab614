import pytest

_RESULTS = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(tag, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    tag, text = mark.args
    _RESULTS.append((tag, text, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for tag, text, ok, dt in _RESULTS:
        tr.write_line(f"[{'PASS' if ok else 'FAIL'}] {tag:>3}  {text}  ({dt:.2f}s)")
