import importlib

import pytest

from fllmetric import _pykernels

_BACKENDS = [_pykernels]
try:
    _BACKENDS.append(importlib.import_module("fllmetric._ckernels"))
except ImportError:  # extension not built
    pass


@pytest.fixture(scope="session", params=_BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def backend(request):
    return request.param


def compiled_available():
    return len(_BACKENDS) > 1


# lines recorded by the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
