import os
import random

import pytest

from braidfss.catalog import builtin
from braidfss.treespace import Space

CATALOG = {
    "thompson2": builtin("thompson", d=2),
    "thompson3": builtin("thompson", d=3),
    "houghton2": builtin("houghton", n=2),
    "qaut": builtin("qaut"),
}

SEED = int(os.environ.get("DIPOLE_SEED", "0"))

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture
def rng(request):
    return random.Random(f"{SEED}:{request.node.nodeid}")


@pytest.fixture(params=sorted(CATALOG))
def space(request):
    p, base = CATALOG[request.param]
    return Space(p, base)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    number, title = marker.args
    ok = _criteria.get(number, (title, True))[1] and rep.passed
    _criteria[number] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {title}")
