import importlib
import time

import pytest

_ACCEPTANCE = []
SESSION_START = [time.perf_counter()]


def record_acceptance(number, title, passed, detail=""):
    _ACCEPTANCE.append((number, title, passed, detail))


@pytest.fixture
def acceptance():
    return record_acceptance


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_ACCEPTANCE):
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{mark}] {number}. {title} {detail}".rstrip())


def _backends():
    mods = [importlib.import_module("rhocalc._pykernels")]
    try:
        mods.append(importlib.import_module("rhocalc._ckernels"))
    except ImportError:
        pass
    return mods


BACKENDS = _backends()


@pytest.fixture(params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def kernels(request):
    return request.param


def pytest_sessionstart(session):
    SESSION_START[0] = time.perf_counter()


def pytest_collection_modifyitems(items):
    # the whole-suite timing check must see every other test finish first
    last = [it for it in items if it.get_closest_marker("suite_end")]
    rest = [it for it in items if not it.get_closest_marker("suite_end")]
    items[:] = rest + last


def pytest_configure(config):
    config.addinivalue_line("markers", "suite_end: run after every other test")
