import pytest

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run checks marked slow (g <= 25 dual route)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""
    def record(name: str, passed: bool, detail: str = "") -> bool:
        _ACCEPTANCE.append((name, passed, detail))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  {name}" + (f"  [{detail}]" if detail else ""))
