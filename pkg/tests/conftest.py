import pytest

from crossorder.groups import (
    GaloisSetup,
    coset_action,
    cyclic_group,
    example_setup,
    make_setup,
    symmetric_group,
)
from crossorder.valuation import trivial_cocycle, validate_cocycle

# Lines recorded by the acceptance module, echoed after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def ex_setup():
    return example_setup()


@pytest.fixture
def f1(ex_setup):
    return validate_cocycle([[[0, 0], [0, 0]], [[0, 0], [1, 1]]], ex_setup)


@pytest.fixture
def f2(ex_setup):
    return validate_cocycle([[[0, 0], [0, 0]], [[0, 0], [2, 2]]], ex_setup)


@pytest.fixture
def trivial(ex_setup):
    return trivial_cocycle(ex_setup)


@pytest.fixture
def c2_dvr():
    return make_setup([[0, 1], [1, 0]], [[0], [0]], ["1", "s"])


@pytest.fixture
def s3_natural():
    g = symmetric_group(3)
    perms = [list(map(int, name)) if name != "1" else [0, 1, 2] for name in g.names]
    return make_setup(g.table, perms, g.names)


@pytest.fixture
def c4_regular():
    g = cyclic_group(4)
    return GaloisSetup(g, coset_action(g, [0]))

