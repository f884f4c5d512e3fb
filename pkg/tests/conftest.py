import re

_CRITERIA: dict[str, bool] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if m is None:
        return
    key = m.group(1)
    if report.when == "call":
        _CRITERIA[key] = _CRITERIA.get(key, True) and report.passed
    elif report.failed:
        _CRITERIA[key] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        verdict = "PASS" if _CRITERIA[key] else "FAIL"
        terminalreporter.write_line(f"CRITERION {key} {verdict}")
