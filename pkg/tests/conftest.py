import os

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(autouse=True)
def _no_config_env(monkeypatch):
    monkeypatch.delenv("CMUP_TOLERANCE_CONFIG", raising=False)


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line per criterion; asserts after recording."""

    def record(number: int, title: str, passed: bool, detail: str, seconds: float):
        line = f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {title}: {detail} ({seconds:.2f} s)"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
