import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the summary is printed at session end."""
    def record(number, label, ok, detail=""):
        ACCEPTANCE_LINES.append((number, "PASS" if ok else "FAIL", label, detail))
        assert ok, f"criterion {number} ({label}) failed: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, label, detail in sorted(ACCEPTANCE_LINES, key=lambda t: t[0]):
        suffix = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"[{status}] {number:>2}. {label}{suffix}")
