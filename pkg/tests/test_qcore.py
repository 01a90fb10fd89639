from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from qlidstone.qcore import QContext, as_rational, format_rational, q_binomial, q_factorial, q_int, q_int_inverse_base

from conftest import q_values

H = QContext(Fraction(1, 2))


def test_q_int_examples():
    assert q_int(H, 0) == 0
    assert q_int(H, 3) == Fraction(7, 4)
    assert q_int(QContext(1), 7) == 7


def test_q_factorial_examples():
    assert q_factorial(H, 0) == 1
    assert q_factorial(H, 3) == Fraction(21, 8)
    assert q_factorial(QContext(1), 4) == 24


def test_q_binomial_examples():
    assert q_binomial(H, 5, 0) == 1
    assert q_binomial(H, 3, 1) == Fraction(7, 4)
    assert q_binomial(QContext(1), 4, 2) == 6
    assert q_binomial(H, 3, 4) == 0
    assert q_binomial(H, 3, -1) == 0


def test_inverse_base_examples():
    assert q_int_inverse_base(H, 1) == 1
    assert q_int_inverse_base(H, 2) == 3
    assert q_int_inverse_base(QContext(1), 5) == 5


@pytest.mark.parametrize("bad", [0, -1, Fraction(3, 2), "2"])
def test_rejects_q_outside_unit_interval(bad):
    with pytest.raises(ValueError):
        QContext(bad)


def test_rejects_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        QContext(0.5)


def test_format_rational():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-3, 4)) == "-3/4"


@given(q_values(), st.integers(0, 12))
def test_symmetry(q, n):
    ctx = QContext(q)
    for k in range(n + 1):
        assert ctx.q_binomial(n, k) == ctx.q_binomial(n, n - k)


@given(q_values(), st.integers(2, 12))
def test_pascal_rule(q, n):
    ctx = QContext(q)
    for k in range(1, n):
        assert ctx.q_binomial(n, k) == ctx.q_binomial(n - 1, k - 1) + q ** k * ctx.q_binomial(n - 1, k)


def test_classical_binomials():
    ctx = QContext(1)
    for n in range(13):
        for k in range(n + 1):
            assert ctx.q_binomial(n, k) == comb(n, k)


@given(q_values(), st.integers(1, 20))
def test_inverse_base_relation(q, n):
    ctx = QContext(q)
    assert ctx.q_int_inverse_base(n) * q ** (n - 1) == ctx.q_int(n)
    # direct definition in base 1/q
    assert ctx.q_int_inverse_base(n) == sum(Fraction(1) / q ** j for j in range(n))


@given(q_values(), st.lists(st.integers(0, 15), min_size=1, max_size=10))
def test_cache_coherence(q, ns):
    warm = QContext(q)
    for n in ns:
        warm.q_factorial(n)
    for n in ns:
        fresh = QContext(q)
        assert warm.q_int(n) == sum(q ** j for j in range(n))
        assert warm.q_factorial(n) == fresh.q_factorial(n)
        assert warm.q_binomial(n, n // 2) == fresh.q_binomial(n, n // 2)
