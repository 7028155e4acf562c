import math

import numpy as np
import pytest

from agile_autopilot.airframe import FlightCondition, default_airframe, mass_properties

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(code, title): acceptance criterion reported in the summary"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        code, title = marker.args
        measured = dict(item.user_properties).get("measured", "")
        _ACCEPTANCE[code] = (title, report.outcome, measured)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for code in sorted(_ACCEPTANCE, key=lambda c: int(c[2:])):
        title, outcome, measured = _ACCEPTANCE[code]
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"{code} {status}  {title}"
        if measured:
            line += f"  [{measured}]"
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def airframe():
    return default_airframe()


def make_condition(airframe, alpha, mach, q=0.0, t=0.0, qbar=30000.0, speed=None):
    """Flight condition built directly from its fields (no atmosphere lookup)."""
    speed = 340.0 * mach if speed is None else speed
    return FlightCondition(alpha=alpha, q=q, speed=speed, mach=mach, qbar=qbar,
                           mass=mass_properties(t, airframe.schedule))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


DEG = math.pi / 180.0
