from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

QS = [Fraction(1, 2), Fraction(1, 3), Fraction(3, 4), Fraction(1)]


def rationals(max_num=9, max_den=9, nonzero=False):
    s = st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))
    return s.filter(bool) if nonzero else s


def q_values():
    """Rationals in (0, 1]."""
    return st.integers(1, 12).flatmap(lambda d: st.integers(1, d).map(lambda n: Fraction(n, d)))


def seeds(min_len, max_len=None):
    max_len = max_len or min_len
    return st.builds(lambda a, rest: [a] + rest, rationals(nonzero=True),
                     st.lists(rationals(), min_size=min_len - 1, max_size=max_len - 1))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
