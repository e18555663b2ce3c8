import pytest

_results: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if call.when == "call" or call.excinfo is not None:
        ok = call.excinfo is None
        prev = _results.get(number)
        if prev is None or prev[0] == "PASS":
            _results[number] = ("PASS" if ok else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        status, title = _results[number]
        terminalreporter.write_line(f"{status}  criterion {number:>2}: {title}")


@pytest.fixture(scope="session")
def contexts():
    """One shared workspace per root datum for the whole session."""
    from crystalsatake.context import Context

    cache = {}

    def get(family, rank):
        if (family, rank) not in cache:
            cache[(family, rank)] = Context.of_type(family, rank)
        return cache[(family, rank)]

    return get
