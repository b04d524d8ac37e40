import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from ffdet.field_core import make_extension_field, make_prime_field  # noqa: E402


@pytest.fixture(scope="session")
def f5():
    return make_prime_field(5)


@pytest.fixture(scope="session")
def f7():
    return make_prime_field(7)


@pytest.fixture(scope="session")
def f11():
    return make_prime_field(11)


@pytest.fixture(scope="session")
def f125():
    return make_extension_field(5, 3)


_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary."""
    number = request.node.get_closest_marker("criterion").args[0]
    state = {"detail": ""}
    yield state
    rep = getattr(request.node, "rep_call", None)
    passed = rep is not None and rep.passed
    _ACCEPTANCE[number] = (passed, state["detail"])


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        passed, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
