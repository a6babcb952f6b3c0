import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import worked_examples  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "data"


@pytest.fixture
def T6():
    import numpy as np

    return np.array(worked_examples.T)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    reports = [
        r
        for key in ("passed", "failed")
        for r in terminalreporter.stats.get(key, [])
        if r.when == "call" and "test_acceptance.py::" in r.nodeid
    ]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(reports, key=lambda r: r.nodeid):
        name = r.nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if r.passed else 'FAIL'}  {name}  ({r.duration:.2f}s)")
