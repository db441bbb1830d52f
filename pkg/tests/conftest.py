import pytest

from eucode.codecs import CodecParams

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _ACCEPTANCE.append((number, title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_ACCEPTANCE):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"AC{number:02d} {status}  {title}")


def small_grid():
    """One representative parameter set per scheme shape, all with n <= 12."""
    return [
        CodecParams.of("spatial", 1),
        CodecParams.of("spatial", 7),
        CodecParams.of("su", 5, 1),
        CodecParams.of("su", 10, 2),
        CodecParams.of("su", 9, 9),
        CodecParams.of("eu-ik", 1),
        CodecParams.of("eu-ik", 3),
        CodecParams.of("eu-ik", 11),
        CodecParams.of("eu-fk", 4, 2),
        CodecParams.of("eu-fk", 7, 3),
        CodecParams.of("eu-fk", 10, 2),
        CodecParams.of("eu-fk", 11, 2),
        CodecParams.of("eu-fk", 12, 5),
    ]


@pytest.fixture(params=small_grid(), ids=str)
def params(request):
    return request.param


@pytest.fixture
def fixture_dir():
    from pathlib import Path
    return Path(__file__).parent / "fixtures"
