import random
import time

import pytest
from hypothesis import settings, strategies as st

from freevl import BaElement, BooleanAlgebra, FormalSum, LatticeElement, free_boolean_algebra

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []
SESSION_START = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture
def ba2():
    return free_boolean_algebra(2)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def algebras(draw, lo=1, hi=6):
    return BooleanAlgebra(draw(st.integers(lo, hi)))


@st.composite
def elements_of(draw, algebra):
    return BaElement(algebra, draw(st.integers(0, algebra.full_mask)))


@st.composite
def sums_of(draw, algebra, max_support=6):
    pairs = draw(st.lists(st.tuples(elements_of(algebra), rationals), max_size=max_support))
    return FormalSum(algebra, pairs)


@st.composite
def lattice_elements_of(draw, algebra, positive=False):
    lo = 0 if positive else -5
    vals = draw(st.lists(st.fractions(min_value=lo, max_value=5, max_denominator=4),
                         min_size=algebra.atom_count, max_size=algebra.atom_count))
    return LatticeElement(algebra, tuple(vals))


@st.composite
def algebra_with(draw, strategy, count=1, lo=1, hi=6):
    algebra = draw(algebras(lo, hi))
    return (algebra, *[draw(strategy(algebra)) for _ in range(count)])
