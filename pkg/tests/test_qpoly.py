from fractions import Fraction

from hypothesis import assume, given, strategies as st

from qlidstone.qcore import QContext
from qlidstone.qpoly import (EVEN, NEITHER, ODD, ZERO, Poly, dq, dq_inv, from_sparse, parity, q_integral, render,
                             render_latex, scale_arg, sparse_terms)

from conftest import q_values, rationals

H = QContext(Fraction(1, 2))
z = Poly.z()

polys = st.lists(rationals(), max_size=13).map(Poly)


def test_arithmetic_examples():
    assert z * z == Poly.monomial(2)
    assert (z + 1) + (-1) == z
    assert 3 * Poly.monomial(3) == Poly([0, 0, 0, 3])
    assert Poly([1, 2, 0, 0]).degree == 1
    assert Poly().degree == -1 and Poly([0, 0]).is_zero()


def test_dq_examples():
    assert dq(H, Poly.monomial(3)) == Poly.monomial(2, Fraction(7, 4))
    assert dq(H, Poly([5])) == Poly()
    assert dq(H, Poly([0, 2, 0, 1])) == Poly([2, 0, Fraction(7, 4)])


def test_dq_inv_examples():
    assert dq_inv(H, Poly.monomial(2)) == Poly([0, 3])
    assert dq_inv(H, Poly([4])) == Poly()
    # q^3 z^3 -> q [3]_q z^2
    assert dq_inv(H, Poly.monomial(3, Fraction(1, 8))) == Poly.monomial(2, Fraction(1, 2) * Fraction(7, 4))


def test_scale_arg_examples():
    assert scale_arg(Poly.monomial(2), Fraction(1, 2)) == Poly.monomial(2, Fraction(1, 4))
    assert scale_arg(z, 1) == z
    assert scale_arg(Poly([0, 1, 0, 1]), 2) == Poly([0, 2, 0, 8])


def test_parity_examples():
    assert parity(Poly([0, 1, 0, 1])) == ODD
    assert parity(Poly([1, 0, 1])) == EVEN
    assert parity(Poly([1, 1])) == NEITHER
    assert parity(Poly()) == ZERO


def test_rendering():
    p = Poly([0, 1, 0, Fraction(1, 8)])
    assert render(p) == "1/8 z^3 + z"
    assert render(-p) == "-1/8 z^3 - z"
    assert render(Poly()) == "0"
    assert render_latex(p) == r"\frac{1}{8}z^{3} + z"
    assert from_sparse(sparse_terms(p)) == p


@given(q_values(), polys, rationals(nonzero=True))
def test_dq_matches_difference_quotient(q, p, x):
    assume(q < 1)
    ctx = QContext(q)
    assert dq(ctx, p)(x) == (p(x) - p(q * x)) / ((1 - q) * x)


@given(q_values(), polys, rationals(nonzero=True))
def test_dq_inv_matches_difference_quotient(q, p, x):
    assume(q < 1)
    ctx = QContext(q)
    assert dq_inv(ctx, p)(x) == (p(x) - p(x / q)) * q / ((q - 1) * x)


@given(polys)
def test_dq_at_one_is_formal_derivative(p):
    assert dq(QContext(1), p) == Poly(m * c for m, c in enumerate(p.coeffs) if m)


@given(q_values(), polys, polys, rationals())
def test_linearity(q, a, b, c):
    ctx = QContext(q)
    for op in (dq, dq_inv):
        assert op(ctx, a * c + b) == op(ctx, a) * c + op(ctx, b)


@given(polys, polys, rationals())
def test_ring_laws(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)
    assert a - a == Poly()


@given(q_values(), st.integers(0, 12))
def test_q_integral_of_monomial(q, m):
    ctx = QContext(q)
    assume(q < 1)
    assert q_integral(ctx, Poly.monomial(m)) == (1 - q) / (1 - q ** (m + 1))
