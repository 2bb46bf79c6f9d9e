import pytest

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion for the summary table."""

    def register(number: int, title: str):
        ACCEPTANCE[number] = ("FAIL", title)

        def passed():
            ACCEPTANCE[number] = ("PASS", title)

        return passed

    return register


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"[{status}] criterion {n}: {title}")
