import os
import sys

import hypothesis
import pytest

sys.path.insert(0, os.path.dirname(__file__))

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_CRITERIA: dict = {}

TITLES = {
    1: "golden F expansions",
    2: "identity suite",
    3: "A4(1) pipeline",
    4: "A3(2) pipeline",
    5: "A1(r) and A2(r), r = 1..4",
    6: "structure of solved expansions",
    7: "Jacobi-Trudi against the bialternant",
}


@pytest.fixture
def criterion():
    """Record one check toward an acceptance criterion.

    ``criterion(n, label, ok, detail)``; a criterion passes only if every
    check recorded under its number passed.
    """
    def record(number, label, ok, detail=""):
        _CRITERIA.setdefault(number, []).append((label, bool(ok), detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        checks = _CRITERIA[number]
        failed = [f"{label}: {detail}" if detail else label for label, ok, detail in checks if not ok]
        status = "FAIL" if failed else "PASS"
        extra = f"  [failed: {'; '.join(failed)}]" if failed else f"  [{len(checks)} checks]"
        terminalreporter.write_line(f"{status}  criterion {number} ({TITLES.get(number, '')}){extra}")
