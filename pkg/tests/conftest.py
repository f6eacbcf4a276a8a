import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_ACCEPTANCE: list[str] = []


@pytest.fixture
def record():
    def _record(label: str, ok: bool, detail: str, seconds: float) -> None:
        line = f"criterion {label:>3}: {'PASS' if ok else 'FAIL'}  [{seconds:6.2f}s]  {detail}"
        _ACCEPTANCE.append(line)
        print(line)
    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
