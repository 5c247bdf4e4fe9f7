import contextlib

import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion, even when the body raises."""

    @contextlib.contextmanager
    def record(number: int, title: str):
        notes: list[str] = []
        try:
            yield notes
        except BaseException:
            ACCEPTANCE_LINES.append(f"FAIL [{number:>2}] {title}" + "".join(f" | {n}" for n in notes))
            raise
        ACCEPTANCE_LINES.append(f"PASS [{number:>2}] {title}" + "".join(f" | {n}" for n in notes))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s[6:8])):
        terminalreporter.write_line(line)
