import pytest

from utdiagram import RegularIdeal, build_diagram

EXAMPLE_N = 7
EXAMPLE_IDEAL = [(5, 1), (6, 1), (7, 1), (7, 2)]

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        num, title = marker.args
        _criteria[num] = (title, rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, ok = _criteria[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {title}")


@pytest.fixture(scope="session")
def example_ideal():
    return RegularIdeal.from_roots(EXAMPLE_N, EXAMPLE_IDEAL)


@pytest.fixture(scope="session")
def example_diagram(example_ideal):
    return build_diagram(example_ideal)
