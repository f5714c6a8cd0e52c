import pytest

from galois_closure._backend import available_backends

ACCEPTANCE_RESULTS = []


@pytest.fixture(params=available_backends(), ids=lambda m: m.NAME)
def kern(request):
    """Each importable kernel backend in turn."""
    return request.param


@pytest.fixture
def record():
    """Record one acceptance line: record(criterion, passed, detail)."""

    def _record(criterion, passed, detail=""):
        ACCEPTANCE_RESULTS.append((criterion, bool(passed), detail))
        print(f"{criterion}: {'PASS' if passed else 'FAIL'} {detail}")

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{criterion:<4} {'PASS' if passed else 'FAIL'}  {detail}")
