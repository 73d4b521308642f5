import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repvar",
    derandomize=True,
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repvar")

_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call" or "test_acceptance" not in item.nodeid:
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    status = "PASS" if rep.passed else "FAIL"
    _ACCEPTANCE.append((status, item.name, doc))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for status, name, doc in _ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] {name}: {doc}")
