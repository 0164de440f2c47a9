import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hilbgw.scalars import DEFAULT_FIELD

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

F = DEFAULT_FIELD
T1, T2 = F.gen("t1"), F.gen("t2")

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def polynomials(draw, max_terms=3, max_deg=2):
    acc = F.zero
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        c = draw(small_ints)
        acc = acc + T1 ** draw(st.integers(0, max_deg)) * T2 ** draw(st.integers(0, max_deg)) * c
    return acc


@st.composite
def scalars(draw):
    num = draw(polynomials())
    den = draw(polynomials())
    if not den:
        den = F.one
    return num / den


@st.composite
def nonzero_scalars(draw):
    x = draw(scalars())
    return x if x else F(draw(st.integers(1, 5)))


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7).map(Fraction)



# filled by test_acceptance.py, echoed in the terminal summary
RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number].line())

