import os

import pytest
from hypothesis import HealthCheck, settings

from willems.groebner import audit_start, audited_bases, is_groebner_raw

settings.register_profile("suite", max_examples=40, deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "suite"))


def pytest_sessionstart(session):
    # every Gröbner basis computed anywhere in the suite is recorded and re-checked at the end
    audit_start()


def pytest_sessionfinish(session, exitstatus):
    bases = audited_bases()
    bad = [b for b in bases if not is_groebner_raw(b[2], b[0])]
    session.config._groebner_audit = (len(bases), len(bad))
    if bad:
        session.exitstatus = pytest.ExitCode.TESTS_FAILED


_CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record and print one PASS/FAIL line for an acceptance criterion."""
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")

    def record(number, ok, detail):
        line = f"CRITERION {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        _CRITERIA[number] = line
        if reporter is not None:
            reporter.write_line("")
            reporter.write_line(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    total, bad = getattr(config, "_groebner_audit", (0, 0))
    terminalreporter.write_line(f"groebner audit over the whole run: {total} distinct bases, {bad} failing")
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[k])
