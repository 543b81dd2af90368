import pytest

from lrhive.hive_core import border_from_triple

_acceptance: dict[int, tuple[str, str]] = {}


@pytest.fixture
def example_border():
    return border_from_triple((2, 1), (2, 1), (3, 2, 1), 3)


@pytest.fixture
def example_hive(example_border):
    def make(x):
        return example_border.extend({(2, 1): x})
    return make


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_criterion_"):
        return
    num = int(name.split("_")[2])
    _acceptance[num] = (report.outcome.upper(), name)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance):
        outcome, name = _acceptance[num]
        terminalreporter.write_line(f"criterion {num}: {outcome:7s} {name}")
