import pytest

from rhombus.grid import generate


@pytest.fixture(scope="session")
def grid_small():
    return generate(400)


@pytest.fixture(scope="session")
def grid_4k():
    # enough rows for the k <= 64 diagonal horizon of 4096 bits
    return generate(4200)


@pytest.fixture(scope="session")
def grid_16k():
    return generate(1 << 14)


ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the build")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    key = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        ACCEPTANCE[key] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(ACCEPTANCE.items()):
        terminalreporter.write_line(f"{status}  {number:>2}. {title}")
