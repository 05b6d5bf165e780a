"""Hypothesis strategies for exact grades and step distributions."""

from fractions import Fraction

from hypothesis import strategies as st

from kmfuzzy import step

grades = st.integers(0, 20).map(lambda k: Fraction(k, 20))
open_grades = st.integers(1, 63).map(lambda k: Fraction(k, 64))
times = st.fractions(min_value=0, max_value=12, max_denominator=6)


@st.composite
def steps(draw, max_breaks=5, start_zero=False, end_one=False):
    k = draw(st.integers(1, max_breaks))
    bps = sorted(draw(st.sets(st.fractions(min_value=Fraction(1, 6), max_value=10,
                                           max_denominator=6), min_size=k, max_size=k)))
    vals = sorted(draw(st.lists(grades, min_size=k + 1, max_size=k + 1)))
    if start_zero:
        vals[0] = Fraction(0)
    if end_one:
        vals[-1] = Fraction(1)
    return step(bps, vals)
