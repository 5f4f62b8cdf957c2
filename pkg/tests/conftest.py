import pytest

from posetbounds.poset import antichain, chain, from_covers


@pytest.fixture
def npos():
    """The N poset: 0<2, 1<2, 1<3."""
    return from_covers(4, [(0, 2), (1, 2), (1, 3)])


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def anti3():
    return antichain(3)


ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[key]:4}  criterion {key}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        ACCEPTANCE_RESULTS[mark.args[0]] = "PASS" if rep.passed else "FAIL"
