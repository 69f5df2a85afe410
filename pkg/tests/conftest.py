import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tsallisnet import example_network  # noqa: E402


@pytest.fixture(scope="session")
def example():
    return example_network()


# -- acceptance reporting --------------------------------------------------

import contextlib  # noqa: E402

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL/SKIP line per acceptance criterion."""

    @contextlib.contextmanager
    def record(label):
        try:
            yield
        except pytest.skip.Exception as exc:
            _ACCEPTANCE.append(f"SKIP  {label} ({exc.msg})")
            raise
        except BaseException:
            _ACCEPTANCE.append(f"FAIL  {label}")
            raise
        _ACCEPTANCE.append(f"PASS  {label}")
        print(f"PASS  {label}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
