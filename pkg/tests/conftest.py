import random

import pytest
from hypothesis import strategies as st

from qmin import FunctionSpec

EXAMPLE1_ON = (0, 5, 6, 7, 9, 10, 13, 14, 15)
CYCLIC_ON = (0, 1, 2, 5, 6, 7)


@pytest.fixture
def example1():
    return FunctionSpec.from_minterms(4, EXAMPLE1_ON)


@pytest.fixture
def cyclic():
    return FunctionSpec.from_minterms(3, CYCLIC_ON)


def random_spec(rng: random.Random, n: int, dc_rate: float = 0.15) -> FunctionSpec:
    """Each minterm is on, dc or off; on is biased to be nonempty-ish."""
    on, dc = [], []
    p_on = rng.uniform(0.1, 0.9)
    for m in range(1 << n):
        r = rng.random()
        if r < dc_rate:
            dc.append(m)
        elif r < dc_rate + (1 - dc_rate) * p_on:
            on.append(m)
    return FunctionSpec.from_minterms(n, on, dc)


@st.composite
def specs(draw, min_vars=1, max_vars=5, with_dc=True):
    n = draw(st.integers(min_vars, max_vars))
    labels = draw(
        st.lists(
            st.sampled_from("01-" if with_dc else "01"), min_size=1 << n, max_size=1 << n
        )
    )
    on = [m for m, s in enumerate(labels) if s == "1"]
    dc = [m for m, s in enumerate(labels) if s == "-"]
    return FunctionSpec.from_minterms(n, on, dc)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
