import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conolly_kit.recurrence import canonical_h_spec, evaluate  # noqa: E402


@pytest.fixture(scope="session")
def h_tables():
    """h_s(1..10^5) for s = 0..8."""
    return {s: evaluate(canonical_h_spec(s), 10**5) for s in range(9)}


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def report(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def record(number, ok, detail):
        lines.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
