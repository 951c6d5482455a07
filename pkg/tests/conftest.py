from __future__ import annotations

from hypothesis import HealthCheck, settings

# exact arithmetic makes individual examples slow but never flaky
settings.register_profile("qfgeom", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qfgeom")

# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
