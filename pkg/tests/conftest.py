import pytest

from grouplex.catalog import resolve_group

_LINES = pytest.StashKey[list]()


def pytest_addoption(parser):
    parser.addoption("--include-slow", action="store_true", help="also run slow-tier catalog groups")


def pytest_configure(config):
    config.stash[_LINES] = []


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def report_line(request):
    """Record one summary line for the acceptance report."""
    return request.config.stash[_LINES].append


@pytest.fixture(scope="session")
def include_slow(request):
    return request.config.getoption("--include-slow")


@pytest.fixture(scope="session")
def grp():
    """Catalog lookup shared across the session (groups are immutable)."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = resolve_group(name)
        return cache[name]

    return get
