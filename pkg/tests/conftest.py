from hypothesis import HealthCheck, settings

settings.register_profile("repo", deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

_CRITERIA: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    number = report.user_properties and dict(report.user_properties).get("criterion")
    if number:
        _CRITERIA[number] = "PASS" if report.outcome == "passed" and not hasattr(report, "wasxfail") else "FAIL"


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker and ("criterion", marker.args[0]) not in item.user_properties:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n}: {_CRITERIA[n]}")
