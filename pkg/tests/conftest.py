import pytest

from degeneuler import _kernels_py

try:
    from degeneuler import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

ACCEPTANCE_LINES: list[str] = []

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    BACKENDS.append(pytest.param(_kernels_c, id="cython"))


@pytest.fixture(params=BACKENDS, scope="module")
def kernel_module(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
