"""Session fixtures for the expensive constructions.

Each heavy search or build runs once per session with its wall time
recorded, so the unit suites can inspect the results and the acceptance
gate can hold the same runs against its time budgets without repeating
them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any

import pytest

from homlab.gadgets import (
    build_indicator,
    find_sparse_incomparable,
    incomparable_pair,
)
from homlab.graphs import complete_graph, make_cycle
from homlab.intervals import embed_poset_into_interval, gadget_for_interval
from homlab.posets import FinitePoset
from homlab.solver import SolverBudget


ACCEPTANCE_VERDICTS: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_VERDICTS:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_VERDICTS:
            terminalreporter.write_line(line)


@dataclass(frozen=True)
class Timed:
    value: Any
    elapsed_secs: float


def timed(fn, *args, **kwargs) -> Timed:
    start = time.monotonic()
    value = fn(*args, **kwargs)
    return Timed(value, time.monotonic() - start)


@pytest.fixture(scope="session")
def c5():
    return make_cycle(5)


@pytest.fixture(scope="session")
def k3():
    return complete_graph(3)


@pytest.fixture(scope="session")
def indicator5():
    return timed(build_indicator, 5, SolverBudget(timeout_secs=300.0))


@pytest.fixture(scope="session")
def indicator7():
    return timed(build_indicator, 7, SolverBudget(timeout_secs=300.0))


@pytest.fixture(scope="session")
def sparse_companion(c5, k3):
    return timed(find_sparse_incomparable, c5, k3, 7,
                 budget=SolverBudget(timeout_secs=120.0))


@pytest.fixture(scope="session")
def pair_between(c5, k3):
    return timed(incomparable_pair, c5, k3,
                 budget=SolverBudget(timeout_secs=1800.0))


@pytest.fixture(scope="session")
def interval_gadget(c5, k3):
    return timed(gadget_for_interval, c5, k3, SolverBudget(timeout_secs=3600.0))


@pytest.fixture(scope="session")
def fractal_budget():
    return SolverBudget(timeout_secs=7200.0)


@pytest.fixture(scope="session")
def embedded_antichain(c5, k3, interval_gadget, fractal_budget):
    q = FinitePoset(["a", "b"])
    return timed(embed_poset_into_interval, q, c5, k3,
                 budget=fractal_budget, gadget=interval_gadget.value)


@pytest.fixture(scope="session")
def embedded_chain(c5, k3, interval_gadget, fractal_budget):
    q = FinitePoset(["a", "b"], [("a", "b")])
    return timed(embed_poset_into_interval, q, c5, k3,
                 budget=fractal_budget, gadget=interval_gadget.value)


@pytest.fixture(scope="session")
def embedded_vee(c5, k3, interval_gadget, fractal_budget):
    q = FinitePoset(["a", "b", "c"], [("a", "b"), ("a", "c")])
    return timed(embed_poset_into_interval, q, c5, k3,
                 budget=fractal_budget, gadget=interval_gadget.value)
