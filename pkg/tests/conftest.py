import pytest

from shiftsg import _pykernels

try:
    from shiftsg import _ckernels
except ImportError:  # extension not built
    _ckernels = None

IMPLS = [pytest.param(_pykernels, id="python"),
         pytest.param(_ckernels, id="cython",
                      marks=pytest.mark.skipif(_ckernels is None, reason="extension not built"))]

# filled by test_acceptance, printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=IMPLS)
def impl(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
