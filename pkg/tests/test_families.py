from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qlidstone.families import (EXAMPLES, POLY_KINDS, classical_bernoulli, classical_euler_at_zero, classical_tangent,
                                example_suite, ladder_residuals, number_kind, q_number_table, q_poly_family,
                                verify_im_identity)
from qlidstone.qcore import QContext
from qlidstone.qpoly import Poly

from conftest import q_values

H = QContext(Fraction(1, 2))
ONE = QContext(1)


def test_classical_oracle():
    assert classical_bernoulli(6) == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)]
    assert [classical_tangent(n) for n in range(5)] == [1, 2, 16, 272, 7936]
    assert [classical_euler_at_zero(n) for n in (1, 3, 5)] == [Fraction(-1, 2), Fraction(1, 4), Fraction(-1, 2)]


def test_number_examples():
    q = H.q
    beta = q_number_table(H, "q_bernoulli", 3).values
    tan = q_number_table(H, "q_tangent", 3).values
    assert beta[0] == 1 and tan[0] == 1
    assert tan[1] == q + q * q
    assert q_number_table(ONE, "q_tangent", 1).values == (1, 2)
    assert q_number_table(ONE, "q_bernoulli", 1).values[1] == Fraction(1, 6)


def test_number_aliases_and_rows():
    assert number_kind("qtangent") == "q_tangent"
    with pytest.raises(ValueError):
        number_kind("catalan")
    assert q_number_table(ONE, "qtangent", 1).rows() == [(0, 1, 1), (1, 3, 2)]


def test_im_identity_by_hand():
    # n = 1: beta_0 T_3/[3]! - 4 beta_2/[2]! * T_1 = 0
    beta = q_number_table(H, "q_bernoulli", 1).values
    tan = q_number_table(H, "q_tangent", 1).values
    F = H.q_factorial
    assert beta[0] * tan[1] / F(3) - 4 * beta[1] / F(2) * tan[0] == 0


@pytest.mark.parametrize("q", [Fraction(1, 2), Fraction(2, 5), Fraction(1)])
def test_im_identity(q):
    assert verify_im_identity(QContext(q), 6).passed


@given(q_values())
def test_im_identity_property(q):
    assert verify_im_identity(QContext(q), 4).passed


def test_poly_examples():
    assert q_poly_family(H, "bernoulli_first", 0).polys[0] == Poly([1])
    assert q_poly_family(H, "bernoulli_second", 0).polys[0] == Poly([1])
    E = q_poly_family(H, "euler_second", 1).polys
    assert E[0] == Poly([1]) and E[1] == Poly([Fraction(-1, 2), 1])


@given(q_values(), st.sampled_from(POLY_KINDS))
def test_ladders(q, kind):
    ctx = QContext(q)
    fam = q_poly_family(ctx, kind, 8)
    assert not any(ladder_residuals(ctx, fam))
    assert all(p.degree == n for n, p in enumerate(fam.polys))


@given(q_values())
def test_euler_even_values(q):
    ctx = QContext(q)
    E = q_poly_family(ctx, "euler_second", 8).polys
    assert [E[2 * n](0) for n in range(5)] == [1, 0, 0, 0, 0]
    # the tilde numbers are the odd values at zero
    assert [E[2 * n + 1](0) for n in range(4)] == list(q_number_table(ctx, "q_euler_tilde", 3).values)


def test_classical_limits():
    b = q_poly_family(ONE, "bernoulli_first", 6).polys
    assert [p(0) for p in b] == classical_bernoulli(6)
    beta = q_number_table(ONE, "q_bernoulli", 4).values
    assert list(beta) == classical_bernoulli(8)[::2]


def test_even_bernoulli_values_match_number_table():
    b = q_poly_family(H, "bernoulli_first", 8).polys
    beta = q_number_table(H, "q_bernoulli", 4).values
    assert [b[2 * n](0) for n in range(5)] == list(beta)


def _by_id(rep):
    return {c.id: c.status for c in rep.clauses}


def test_ex3_unit_seed_gives_cosh():
    rep = example_suite(H, "ex3", 4)
    ids = _by_id(rep)
    assert all(s == "pass" for i, s in ids.items() if not i.startswith(("literal", "appell-odd")))


LITERAL_CLAUSES = ("literal-membership:", "appell-odd-values-vanish")


@pytest.mark.parametrize("which", EXAMPLES)
def test_examples_fail_only_on_literal_membership(which):
    rep = example_suite(H, which, 4)
    assert rep.failures(), "the literal sequences are expected to leave the class"
    for c in rep.failures():
        assert c.id.removeprefix("euler:").startswith(LITERAL_CLAUSES), c.id
    assert any(c.id.startswith("member:") for c in rep.clauses)
