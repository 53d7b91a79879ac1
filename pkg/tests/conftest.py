from pathlib import Path

import numpy as np
import pytest

from matfit import Dataset

DATA = Path(__file__).parent / "data"

TABLE1_X = [39.206, 29.74, 21.31, 12.087, 1.812, 0.001]
TABLE1_Y = [751.912, 567.121, 403.746, 221.738, 18.8418, 1.88672]


@pytest.fixture
def table1():
    return Dataset(TABLE1_X, TABLE1_Y)


@pytest.fixture
def table1_path():
    return DATA / "table1.csv"


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
