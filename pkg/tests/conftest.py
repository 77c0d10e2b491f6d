"""Shared test helpers: the acceptance-criteria summary printer."""

ACCEPTANCE_RESULTS: list = []


def record_acceptance(line: str):
    ACCEPTANCE_RESULTS.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
