import contextlib
import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("quick", max_examples=15, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def criterion(request, capsys):
    """Record one PASS/FAIL line for an acceptance criterion and print it."""
    @contextlib.contextmanager
    def check(number: int, title: str):
        detail = []
        try:
            yield detail
        except BaseException as exc:
            line = f"criterion {number:>2} FAIL  {title}: {exc}".splitlines()[0]
            _emit(request, capsys, line)
            raise
        suffix = f" ({'; '.join(detail)})" if detail else ""
        _emit(request, capsys, f"criterion {number:>2} PASS  {title}{suffix}")
    return check


def _emit(request, capsys, line):
    request.config.stash.setdefault(_LINES, []).append(line)
    with capsys.disabled():
        print("\n" + line)


_LINES = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
