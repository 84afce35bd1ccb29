import sys

import pytest

# the oracle helpers parse long decimal strings with int()
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

sys.path.insert(0, __file__.rsplit("/", 1)[0])

_criteria = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's outcome for the end-of-run summary."""
    name = request.node.name
    _criteria[name] = "FAIL"
    yield
    _criteria[name] = "PASS"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.failed and item.name in _criteria:
        _criteria[item.name] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(_criteria.items()):
        terminalreporter.write_line(f"{status}  {name}")
