import pytest
from hypothesis import HealthCheck, settings

from annihilator.field import GF2, make_field
from annihilator.inverse import Sequence, from_sequence
from golden import EXAMPLE_TERMS

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("fast", max_examples=20, deadline=None)
settings.load_profile("default")


@pytest.fixture
def example_seq():
    return Sequence(GF2, EXAMPLE_TERMS)


@pytest.fixture
def example_form(example_seq):
    return from_sequence(example_seq)


@pytest.fixture
def gf5():
    return make_field("prime", 5)


# one PASS/FAIL line per acceptance criterion in the terminal summary

_criteria = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[marker] = report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = (mark.args[0], mark.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), outcome in sorted(_criteria.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num}: {title}")
