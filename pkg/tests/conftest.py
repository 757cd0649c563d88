import sys
from pathlib import Path

import pytest

from tilepump import formats

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
sys.path.insert(0, str(HERE))


def load_tiles(name):
    return formats.parse_tile_system((FIXTURES / f"{name}.tiles").read_text())


def load_assembly(name):
    return formats.parse_assembly((FIXTURES / f"{name}.asm").read_text())


def load_curves(name):
    return formats.parse_curves((FIXTURES / f"{name}.curves").read_text())


@pytest.fixture
def row_system():
    return load_tiles("row")


@pytest.fixture
def corner_system():
    return load_tiles("corner")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
