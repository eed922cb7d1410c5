import pytest

from liechar import parse_algebra


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("LIECHAR_CACHE", str(tmp_path / "cache"))


@pytest.fixture(scope="session")
def A1():
    return parse_algebra("A1")


@pytest.fixture(scope="session")
def A2():
    return parse_algebra("A2")


@pytest.fixture(scope="session")
def C2():
    return parse_algebra("C2")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        status, title = RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")
