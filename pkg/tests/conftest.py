from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings

from kmfuzzy import from_entries, step

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
HALF = Fraction(1, 2)


def worked_pair():
    return step([1, 2], [0, HALF, 1])


def worked_space():
    A = worked_pair()
    C = step([2], [0, 1])
    return from_entries("xyz", [[None, A, C], [A, None, A], [C, A, None]])


@pytest.fixture
def worked():
    return worked_space()


@pytest.fixture
def data_dir():
    return DATA


ACCEPTANCE_LINES = []


def record(criterion: int, passed: bool, detail: str):
    line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
