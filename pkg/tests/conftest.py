import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from schureuclid.schur import TripleMode, schur_number  # noqa: E402

ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def strong4():
    """The t = 4 strong certificate; computed once per session (about a minute)."""
    start = time.perf_counter()
    cert = schur_number(4, TripleMode.STRONG)
    return cert, time.perf_counter() - start


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
