import pytest

_LINES = []


@pytest.fixture
def criterion():
    """Record and print one PASS/FAIL line per acceptance criterion."""

    def report(number, title, ok, detail):
        line = f"[criterion {number:>2}] {'PASS' if ok else 'FAIL'}  {title}: {detail}"
        _LINES.append(line)
        print(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_LINES, key=lambda s: int(s.split("]")[0].split()[-1])):
        terminalreporter.write_line(line)
