import random

import hypothesis
import pytest
from hypothesis import strategies as st

from veronese_type.core import Monomial, MonomialIdeal
from veronese_type.polymatroid import VeroneseParams

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=1000, deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def core_params(draw, max_n=7, max_d=20):
    """``d > a_1 >= ... >= a_n >= 1`` with ``sum(a) >= d``."""
    d = draw(st.integers(2, max_d))
    n = draw(st.integers(1, max_n))
    caps = draw(st.lists(st.integers(1, d - 1), min_size=n, max_size=n))
    hypothesis.assume(sum(caps) >= d)
    return VeroneseParams(d, tuple(sorted(caps, reverse=True)))


@st.composite
def sorted_params(draw, max_n=5, max_d=8, max_divisors=3000):
    """``d >= a_1 >= ... >= a_n >= 1``, small enough for colon enumeration."""
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(1, max_n))
    caps = draw(st.lists(st.integers(1, d), min_size=n, max_size=n))
    hypothesis.assume(sum(caps) >= d)
    size = 1
    for c in caps:
        size *= c + 1
    hypothesis.assume(size <= max_divisors)
    return VeroneseParams(d, tuple(sorted(caps, reverse=True)))


@st.composite
def raw_params(draw, max_n=5, max_d=8):
    """Unsorted caps, zeros and caps above ``d`` allowed."""
    d = draw(st.integers(1, max_d))
    caps = draw(st.lists(st.integers(0, d + 2), min_size=1, max_size=max_n))
    hypothesis.assume(sum(caps) >= d)
    return VeroneseParams(d, tuple(caps))


def monomials(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n).map(Monomial)


@st.composite
def ideal_and_monomials(draw, k=2, max_n=4):
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(monomials(n), min_size=1, max_size=5))
    I = MonomialIdeal(n, tuple(gens))
    zs = [draw(monomials(n)) for _ in range(k)]
    return (I, *zs)


def random_core_params(rng: random.Random, max_n=7, max_d=20) -> VeroneseParams:
    while True:
        n = rng.randint(1, max_n)
        d = rng.randint(2, max_d)
        caps = sorted((rng.randint(1, d - 1) for _ in range(n)), reverse=True)
        if sum(caps) >= d:
            return VeroneseParams(d, tuple(caps))


def random_sorted_params(rng: random.Random, max_n=6, max_d=12, max_divisors=10**5) -> VeroneseParams:
    while True:
        n = rng.randint(1, max_n)
        d = rng.randint(1, max_d)
        caps = sorted((rng.randint(1, d) for _ in range(n)), reverse=True)
        size = 1
        for c in caps:
            size *= c + 1
        if sum(caps) >= d and size <= max_divisors:
            return VeroneseParams(d, tuple(caps))


@pytest.fixture
def rng():
    return random.Random(20240611)


# standard worked examples, already in core or sorted form
FIXTURES = {
    "7;4,3,2,1,1": VeroneseParams(7, (4, 3, 2, 1, 1)),
    "11;7,4,3,2,2,1": VeroneseParams(11, (7, 4, 3, 2, 2, 1)),
    "9;7,3,3,2,1": VeroneseParams(9, (7, 3, 3, 2, 1)),
    "8;5,5,4,3,1,1": VeroneseParams(8, (5, 5, 4, 3, 1, 1)),
    "15;9,6,4,3,2,2,1,1": VeroneseParams(15, (9, 6, 4, 3, 2, 2, 1, 1)),
    "5;3,2,1": VeroneseParams(5, (3, 2, 1)),
}


# one line per acceptance criterion, filled by test_acceptance and echoed at the end
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
