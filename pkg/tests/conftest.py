import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from linecomplex import enumerator  # noqa: E402

_ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def record_criterion(number: int, description: str, ok: bool) -> bool:
    """Remember one acceptance verdict; printed in the terminal summary."""
    prev = _ACCEPTANCE.get(number)
    _ACCEPTANCE[number] = (description, ok and (prev is None or prev[1]))
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {description}")
    return ok


@pytest.fixture(scope="session")
def full_ledger():
    return enumerator.sweep_all(jobs=1)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        desc, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {desc}")
