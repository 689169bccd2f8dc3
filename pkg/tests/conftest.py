import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mosaicknots.bounds import witness  # noqa: E402
from mosaicknots.tiles import Mosaic  # noqa: E402


@pytest.fixture
def circle():
    return Mosaic.from_rows([[2, 1], [3, 4]])


@pytest.fixture
def trefoil():
    return witness("trefoil")


@pytest.fixture
def figure_eight():
    return witness("figure-eight")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=lambda k: int(k[2:])):
            terminalreporter.write_line(RESULTS[key])
