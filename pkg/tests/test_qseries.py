from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qlidstone.qcore import QContext
from qlidstone.qpoly import Poly
from qlidstone.qseries import (TruncSeries, ZeroConstantTerm, from_numbers, q_exp_series, q_hyper_series, series_mul,
                               series_quotient, series_reciprocal)

from conftest import q_values, rationals

H = QContext(Fraction(1, 2))
one = Poly([1])
z = Poly.z()


def test_mul_examples():
    assert series_mul(from_numbers([1, 1, 0]), from_numbers([1, -1, 0])) == from_numbers([1, 0, -1])
    a = TruncSeries([z, 1, z * z])
    assert series_mul(a, TruncSeries.one(2)) == a
    assert series_mul(from_numbers([1, 1, 1, 1]), from_numbers([1, 1])).order == 1


def test_reciprocal_examples():
    assert series_reciprocal(TruncSeries.one(3)) == TruncSeries.one(3)
    assert series_reciprocal(from_numbers([1, -1, 0, 0])) == from_numbers([1, 1, 1, 1])
    with pytest.raises(ZeroConstantTerm):
        series_reciprocal(from_numbers([0, 1]))
    with pytest.raises(ZeroConstantTerm):
        series_reciprocal(TruncSeries([z, 1]))


def test_div_t():
    s = from_numbers([0, 2, 3])
    assert s.div_t() == from_numbers([2, 3])
    with pytest.raises(ZeroConstantTerm):
        from_numbers([1, 2]).div_t()
    assert s.mul_t() == from_numbers([0, 0, 2, 3])


def test_exp_examples():
    assert q_exp_series(H, "small_e", one, 2) == from_numbers([1, 1, Fraction(2, 3)])
    assert q_exp_series(H, "big_E", one, 1) == from_numbers([1, 1])
    assert q_exp_series(H, "small_e", z, 2) == TruncSeries([one, z, z * z * Fraction(2, 3)])


def test_hyper_examples():
    F3 = H.q_factorial(3)
    assert q_hyper_series(H, "sinh", z, 3) == TruncSeries([Poly(), z, Poly(), Poly.monomial(3) / F3])
    # tan: T_1 = 1, T_3 = q + q^2
    q = H.q
    assert q_hyper_series(H, "tan", one, 3) == from_numbers([0, 1, 0, (q + q * q) / F3])
    assert q_hyper_series(H, "t_coth", one, 2) == from_numbers([1, 0, 1 / H.q_factorial(2) - 1 / F3])
    c1 = QContext(1)
    assert q_hyper_series(c1, "t_coth", one, 2) == from_numbers([1, 0, Fraction(1, 3)])


@given(q_values(), st.integers(0, 16))
def test_exponentials_are_inverse(q, N):
    ctx = QContext(q)
    lhs = series_mul(q_exp_series(ctx, "small_e", one, N), q_exp_series(ctx, "big_E", -one, N))
    assert lhs == TruncSeries.one(N)


@given(st.lists(rationals(), min_size=1, max_size=10), rationals(nonzero=True))
def test_reciprocal_property(rest, a0):
    s = from_numbers([a0] + rest)
    assert series_mul(s, series_reciprocal(s)) == TruncSeries.one(s.order)


@given(q_values(), st.integers(0, 10))
def test_hyperbolic_parts(q, N):
    ctx = QContext(q)
    e = q_exp_series(ctx, "small_e", z, N)
    E = q_exp_series(ctx, "big_E", z, N)
    assert q_hyper_series(ctx, "sinh", z, N) == e.odd_part()
    assert q_hyper_series(ctx, "cosh", z, N) == e.even_part()
    assert q_hyper_series(ctx, "Sinh", z, N) == E.odd_part()
    assert q_hyper_series(ctx, "Cosh", z, N) == E.even_part()
    assert q_hyper_series(ctx, "sinh", z, N) + q_hyper_series(ctx, "cosh", z, N) == e


@given(q_values(), st.integers(1, 10))
def test_quotients_agree(q, N):
    ctx = QContext(q)
    tanh = q_hyper_series(ctx, "tanh", one, N + 1)
    t_coth = q_hyper_series(ctx, "t_coth", one, N)
    assert series_mul(tanh.div_t(), t_coth) == TruncSeries.one(N)
    tan = q_hyper_series(ctx, "tan", one, N + 1)
    t_cot = q_hyper_series(ctx, "t_cot", one, N)
    assert series_mul(tan.div_t(), t_cot) == TruncSeries.one(N)
    assert series_quotient(q_hyper_series(ctx, "sin", one, N), q_hyper_series(ctx, "cos", one, N)) == tan.truncate(N)


@given(q_values(), st.integers(0, 12))
def test_capital_quotients_equal_small(q, N):
    ctx = QContext(q)
    assert q_hyper_series(ctx, "Tanh", one, N) == q_hyper_series(ctx, "tanh", one, N)
    assert q_hyper_series(ctx, "t_Coth", one, N) == q_hyper_series(ctx, "t_coth", one, N)


def test_classical_tan_and_coth():
    from math import factorial

    from qlidstone.families import classical_bernoulli, classical_tangent
    c1 = QContext(1)
    tan = q_hyper_series(c1, "tan", one, 11)
    coth = q_hyper_series(c1, "t_coth", one, 10)
    B = classical_bernoulli(10)
    for n in range(6):
        assert tan[2 * n + 1][0] == classical_tangent(n) / factorial(2 * n + 1)
        assert coth[2 * n][0] == Fraction(4 ** n) * B[2 * n] / factorial(2 * n)
