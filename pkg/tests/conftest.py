from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

CAT = ((2, 1), (1, 1))
NEG_CAT = ((-2, -1), (-1, -1))
GOLDEN = ((1, 1), (1, 0))
FULL2 = ((1, 1), (1, 1))


def square_matrices(max_dim=4, lo=-3, hi=3):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
        ).map(lambda rows: tuple(map(tuple, rows)))
    )


def zero_one_matrices(max_dim=5):
    return square_matrices(max_dim, 0, 1)


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def series_coeffs(order, constant=None):
    tail = st.lists(fractions, min_size=order, max_size=order)
    if constant is None:
        return st.tuples(fractions, tail).map(lambda t: [t[0], *t[1]])
    return tail.map(lambda t: [Fraction(constant), *t])


@pytest.fixture
def cat():
    return CAT


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in mod.RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
