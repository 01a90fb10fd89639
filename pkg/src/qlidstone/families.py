"""q-analogues of the Bernoulli and Euler numbers and polynomials.

Also here: the convolution identity linking the Bernoulli numbers to the
tangent numbers, plus the worked example families built from them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .lidstone import (EVEN_I, EVEN_II, ODD_I, ODD_II, Family, build_from_seed, conjugate_seed,
                       gf_check, kernel_series, seed_series, verify_defining_system)
from .qcore import QContext
from .qpoly import Poly, dq, dq_inv, scale_arg
from .qseries import TruncSeries, ZeroConstantTerm, q_exp_series, q_hyper_series, series_mul, series_quotient
from .report import Report

NUMBER_KINDS = ("q_bernoulli", "q_tangent", "q_euler_tilde")
NUMBER_ALIASES = {"qbernoulli": "q_bernoulli", "qtangent": "q_tangent", "qeuler": "q_euler_tilde",
                  "q_euler": "q_euler_tilde", "qeulertilde": "q_euler_tilde"}


def number_kind(name: str) -> str:
    name = NUMBER_ALIASES.get(name, name)
    if name not in NUMBER_KINDS:
        raise ValueError(f"unknown number kind {name!r}")
    return name


@dataclass(frozen=True)
class QNumberTable:
    """``values[k]`` is the number with subscript ``indices[k]``:
    ``beta_{2k}``, ``T_{2k+1}`` or ``E~_{2k+1}``."""

    kind: str
    q: Fraction
    values: tuple
    indices: tuple

    def rows(self):
        return list(zip(range(len(self.values)), self.indices, self.values))


def q_number_table(ctx: QContext, kind: str, N: int) -> QNumberTable:
    """The first ``N+1`` numbers of the requested kind, read off series
    quotients:

    * ``beta_{2n} = [2n]! [t^{2n}] (t coth_q t) / 4^n``;
    * ``T_{2n+1} = [2n+1]! [t^{2n+1}] tan_q t``;
    * ``E~_{2n+1} = -[2n+1]! [t^{2n+1}] tanh_q t / 2^{2n+1}``.
    """
    kind = number_kind(kind)
    if N < 0:
        raise ValueError("N must be >= 0")
    one = Poly([1])
    F = ctx.q_factorial
    if kind == "q_bernoulli":
        s = q_hyper_series(ctx, "t_coth", one, 2 * N)
        vals = [F(2 * n) * s[2 * n][0] / 4 ** n for n in range(N + 1)]
        idx = [2 * n for n in range(N + 1)]
    elif kind == "q_tangent":
        s = q_hyper_series(ctx, "tan", one, 2 * N + 1)
        vals = [F(2 * n + 1) * s[2 * n + 1][0] for n in range(N + 1)]
        idx = [2 * n + 1 for n in range(N + 1)]
    else:
        s = q_hyper_series(ctx, "tanh", one, 2 * N + 1)
        vals = [-F(2 * n + 1) * s[2 * n + 1][0] / 2 ** (2 * n + 1) for n in range(N + 1)]
        idx = [2 * n + 1 for n in range(N + 1)]
    return QNumberTable(kind, ctx.q, tuple(vals), tuple(idx))


def verify_im_identity(ctx: QContext, N: int) -> Report:
    """``sum_k (-1)^k 4^k beta_{2k}/[2k]! * T_{2n-2k+1}/[2n-2k+1]! = delta_{n0}``."""
    rep = Report("im-identity", "numbers", ctx.q, N)
    beta = q_number_table(ctx, "q_bernoulli", N).values
    tan = q_number_table(ctx, "q_tangent", N).values
    F = ctx.q_factorial
    for n in range(N + 1):
        s = sum(((-1) ** k * 4 ** k * beta[k] / F(2 * k) * tan[n - k] / F(2 * n - 2 * k + 1)
                 for k in range(n + 1)), Fraction(0))
        rep.check(f"convolution[{n}]", s - (1 if n == 0 else 0))
    return rep


# polynomial families

POLY_KINDS = ("bernoulli_first", "bernoulli_second", "euler_first", "euler_second")


@dataclass(frozen=True)
class QPolyFamily:
    kind: str
    q: Fraction
    polys: tuple

    @property
    def inverse_base(self) -> bool:
        return self.kind.endswith("second")


def _half_product(ctx: QContext, order: int) -> TruncSeries:
    half = Fraction(1, 2)
    return series_mul(q_exp_series(ctx, "small_e", half, order), q_exp_series(ctx, "big_E", half, order))


def q_poly_family(ctx: QContext, kind: str, N: int) -> QPolyFamily:
    """``[n]_q! [t^n]`` of

    * ``t X(zt) / (e_q(t/2) E_q(t/2) - 1)`` for the Bernoulli kinds,
    * ``2 X(zt) / (e_q(t/2) E_q(t/2) + 1)`` for the Euler kinds,

    with ``X = e_q`` (first kind) or ``E_q`` (second kind).
    """
    if kind not in POLY_KINDS:
        raise ValueError(f"unknown polynomial kind {kind!r}")
    exp_kind = "small_e" if kind.endswith("first") else "big_E"
    X = q_exp_series(ctx, exp_kind, Poly.z(), N)
    if kind.startswith("bernoulli"):
        den = _half_product(ctx, N + 1) - TruncSeries.one(N + 1)
        if den[0] or den[1] != Poly([1]):
            raise ZeroConstantTerm("Bernoulli denominator does not start with t")
        S = series_quotient(X, den.div_t())
    else:
        S = series_quotient(X.scale(2), _half_product(ctx, N) + TruncSeries.one(N))
    return QPolyFamily(kind, ctx.q, tuple(S[n] * ctx.q_factorial(n) for n in range(N + 1)))


def ladder_residuals(ctx: QContext, fam: QPolyFamily) -> list[Poly]:
    op = dq_inv if fam.inverse_base else dq
    return [op(ctx, fam.polys[n]) - fam.polys[n - 1] * ctx.q_int(n) for n in range(1, len(fam.polys))]


# classical oracle (q = 1), independent of the series engine


def classical_bernoulli(N: int) -> list[Fraction]:
    """``B_0..B_N`` with ``B_1 = -1/2`` from ``sum_{k<=m} C(m+1,k) B_k = 0``."""
    B = [Fraction(1)]
    for m in range(1, N + 1):
        B.append(-sum((comb(m + 1, k) * B[k] for k in range(m)), Fraction(0)) / (m + 1))
    return B


def classical_tangent(n: int) -> Fraction:
    """``T_{2n+1}``: 1, 2, 16, 272, ..."""
    B = classical_bernoulli(2 * n + 2)[2 * n + 2]
    m = n + 1
    return (-1) ** (m - 1) * 4 ** m * (4 ** m - 1) * B / (2 * m)


def classical_euler_at_zero(n: int) -> Fraction:
    """Euler polynomial value ``E_n(0) = -2 (2^{n+1} - 1) B_{n+1} / (n+1)``."""
    B = classical_bernoulli(n + 1)[n + 1]
    return -2 * (2 ** (n + 1) - 1) * B / (n + 1)


# worked examples


def _literal_image(fam: QPolyFamily, parity: str, N: int) -> list[Poly]:
    """``2^{2n+1} a_{2n+1}(z/2)`` or ``2^{2n} a_{2n}(z/2)``, with no
    precondition check."""
    half = Fraction(1, 2)
    if parity == "odd":
        return [scale_arg(fam.polys[2 * n + 1], half) * 2 ** (2 * n + 1) for n in range(N + 1)]
    return [scale_arg(fam.polys[2 * n], half) * 2 ** (2 * n) for n in range(N + 1)]


def _membership(rep: Report, ctx: QContext, family: Family, fam: QPolyFamily, N: int, seed) -> None:
    literal = _literal_image(fam, family.parity, N)
    for m in range(1, 2 * N + 2, 2):
        rep.check(f"appell-odd-values-vanish[{m}]", fam.polys[m](0))
    rep.extend(verify_defining_system(ctx, family, literal, seed), "literal-membership:")


def _gf_clauses(rep: Report, ctx: QContext, family: Family, seed, N: int, prefix: str) -> None:
    rep.extend(gf_check(ctx, family, seed, N), prefix)


def _ex1(ctx: QContext, N: int) -> Report:
    rep = Report("ex1", ODD_I.name, ctx.q, N)
    F = ctx.q_factorial
    order = 2 * N + 2
    beta = q_number_table(ctx, "q_bernoulli", N + 1).values
    etil = q_number_table(ctx, "q_euler_tilde", N + 1).values
    b = q_poly_family(ctx, "bernoulli_first", 2 * N + 2)
    alpha = [4 ** n * ctx.q_int(2 * n + 1) * beta[n] for n in range(N + 2)]

    for n in range(0, 2 * N + 3, 2):
        rep.check(f"b-at-0-is-beta[{n}]", b.polys[n](0) - beta[n // 2])
    _membership(rep, ctx, ODD_I, b, N, alpha)
    # the seed in terms of the literal sequence's slopes, D_q p_n(0)
    literal = _literal_image(b, "odd", N)
    for n in range(N + 1):
        rep.check(f"literal-slope-is-seed[{n}]", dq(ctx, literal[n])(0) - alpha[n])

    one = Poly([1])
    rep.check("g-equals-t-coth", seed_series(ctx, ODD_I, alpha, order) == q_hyper_series(ctx, "t_coth", one, order))
    member = build_from_seed(ctx, ODD_I, alpha, N)
    rep.extend(verify_defining_system(ctx, ODD_I, member, alpha), "member:")
    _gf_clauses(rep, ctx, ODD_I, alpha, N, "member-gf:")

    # coth_q(t) sinh_q(zt) and tanh_q(t) sinh_q(zt) t^{-2}
    sinh_z = q_hyper_series(ctx, "sinh", Poly.z(), order + 2)
    lhs = series_mul(q_hyper_series(ctx, "t_coth", one, order + 1), sinh_z.truncate(order + 1).div_t())
    conj = conjugate_seed(ctx, ODD_I, alpha, N)
    hat = build_from_seed(ctx, ODD_I, conj, N)
    rhs_conj = series_mul(q_hyper_series(ctx, "tanh", one, order + 2), sinh_z)
    for n in range(N + 1):
        rep.check(f"coth-sinh-coefficient[{n}]", lhs[2 * n] - member[n] / F(2 * n + 1))
        rep.check(f"tanh-sinh-coefficient[{n}]", rhs_conj[2 * n + 2] - hat[n] / F(2 * n + 1))

    tanh = q_hyper_series(ctx, "tanh", one, 2 * N + 1)
    for n in range(N + 1):
        rep.check(f"tanh-from-euler-numbers[{n}]",
                  tanh[2 * n + 1][0] + etil[n] * 2 ** (2 * n + 1) / F(2 * n + 1))
    E = q_poly_family(ctx, "euler_second", 2 * N + 1)
    for n in range(N + 1):
        rep.check(f"euler-tilde-is-E-at-0[{2 * n + 1}]", E.polys[2 * n + 1](0) - etil[n])

    for n in range(N + 1):
        closed = Poly()
        for k in range(n + 1):
            closed = closed + Poly.monomial(2 * n - 2 * k + 1, -ctx.q_binomial(2 * n + 1, 2 * k + 1) * etil[k]
                                            / ctx.q_int(2 * n - 2 * k + 1) * 2 ** (2 * k + 1))
        rep.check(f"conjugate-closed-form[{n}]", closed - hat[n])
    return rep


def _ex2(ctx: QContext, N: int) -> Report:
    rep = Report("ex2", ODD_II.name, ctx.q, N)
    F = ctx.q_factorial
    order = 2 * N + 2
    one = Poly([1])
    beta = q_number_table(ctx, "q_bernoulli", N + 1).values
    etil = q_number_table(ctx, "q_euler_tilde", N + 1).values
    B = q_poly_family(ctx, "bernoulli_second", 2 * N + 2)
    alpha = [4 ** n * ctx.q_int(2 * n + 1) * beta[n] for n in range(N + 2)]

    _membership(rep, ctx, ODD_II, B, N, alpha)
    member = build_from_seed(ctx, ODD_II, alpha, N)
    rep.extend(verify_defining_system(ctx, ODD_II, member, alpha), "member:")
    for n in range(N + 1):
        series_form = Poly()
        for k in range(n + 1):
            series_form = series_form + Poly.monomial(
                2 * k + 1, ctx.q_binomial(2 * n + 1, 2 * k + 1) * ctx.power(k * (2 * k + 1)) * 4 ** (n - k) * beta[n - k])
        rep.check(f"series-form[{n}]", series_form - member[n])
    _gf_clauses(rep, ctx, ODD_II, alpha, N, "member-gf:")

    rep.check("Coth-equals-coth", q_hyper_series(ctx, "t_Coth", one, order) == q_hyper_series(ctx, "t_coth", one, order))
    rep.check("Tanh-equals-tanh", q_hyper_series(ctx, "Tanh", one, order) == q_hyper_series(ctx, "tanh", one, order))
    Sinh_z = q_hyper_series(ctx, "Sinh", Poly.z(), order + 2)
    lhs = series_mul(q_hyper_series(ctx, "t_Coth", one, order + 1), Sinh_z.truncate(order + 1).div_t())
    conj = conjugate_seed(ctx, ODD_II, alpha, N)
    hat = build_from_seed(ctx, ODD_II, conj, N)
    tanh_Sinh = series_mul(q_hyper_series(ctx, "Tanh", one, order + 2), Sinh_z)
    for n in range(N + 1):
        rep.check(f"Coth-Sinh-coefficient[{n}]", lhs[2 * n] - member[n] / F(2 * n + 1))
        # as printed the conjugate expansion is in t^{2n}; the t^{2n+2} form holds
        rep.check(f"printed-Tanh-Sinh-coefficient[{n}]", tanh_Sinh[2 * n] - hat[n] / F(2 * n + 1), finding=True)
        rep.check(f"Tanh-Sinh-coefficient-shifted[{n}]", tanh_Sinh[2 * n + 2] - hat[n] / F(2 * n + 1))

    for n in range(N + 1):
        printed, fixed = Poly(), Poly()
        for k in range(n + 1):
            c = -ctx.q_binomial(2 * n + 1, 2 * k + 1) / ctx.q_int(2 * n - 2 * k + 1) * ctx.power(k * (2 * k + 1))
            printed = printed + Poly.monomial(2 * k + 1, c * etil[k] * 2 ** (2 * n - 2 * k + 1))
            fixed = fixed + Poly.monomial(2 * k + 1, c * etil[n - k] * 2 ** (2 * n - 2 * k + 1))
        rep.check(f"printed-conjugate-closed-form[{n}]", printed - hat[n], finding=True)
        rep.check(f"conjugate-closed-form-reindexed[{n}]", fixed - hat[n])

    literal = _literal_image(B, "odd", N)
    for n in range(N + 1):
        A_n = scale_arg(B.polys[2 * n + 1], Fraction(1, 2)) * (Fraction(2 ** (2 * n + 1)) / F(2 * n + 1))
        rep.check(f"scaled-A[{n}]", literal[n] - A_n * F(2 * n + 1))

    _euler_odd(rep, ctx, N)
    return rep


def _euler_odd(rep: Report, ctx: QContext, N: int) -> None:
    """The odd type-II example built from the second-kind Euler polynomials."""
    F = ctx.q_factorial
    E = q_poly_family(ctx, "euler_second", 2 * N + 2)
    etil_even = [E.polys[2 * n](0) for n in range(N + 2)]
    for n in range(N + 2):
        rep.check(f"euler:E-even-at-0-is-delta[{2 * n}]", etil_even[n] - (1 if n == 0 else 0))
    alpha = [4 ** n * ctx.q_int(2 * n + 1) * etil_even[n] for n in range(N + 2)]
    rep.check("euler:seed-is-unit", alpha == [1] + [0] * (N + 1))
    order = 2 * N + 2
    rep.check("euler:h-is-one", seed_series(ctx, ODD_II, alpha, order) == TruncSeries.one(order))

    literal = _literal_image(E, "odd", N)
    for m in range(1, 2 * N + 2, 2):
        rep.check(f"euler:appell-odd-values-vanish[{m}]", E.polys[m](0))
    rep.extend(verify_defining_system(ctx, ODD_II, literal, alpha), "euler:literal-membership:")

    member = build_from_seed(ctx, ODD_II, alpha, N)
    K = kernel_series(ctx, ODD_II, order)
    hat = build_from_seed(ctx, ODD_II, conjugate_seed(ctx, ODD_II, alpha, N), N)
    t_Sinh = q_hyper_series(ctx, "Sinh", Poly.z(), order).mul_t()
    for n in range(N + 1):
        rep.check(f"euler:Sinh-over-t-coefficient[{n}]", K[2 * n] - member[n] / F(2 * n + 1))
        rep.check(f"euler:printed-t-Sinh-coefficient[{n}]", t_Sinh[2 * n] - hat[n] / F(2 * n + 1), finding=True)
        rep.check(f"euler:conjugate-is-Sinh-over-t[{n}]", K[2 * n] - hat[n] / F(2 * n + 1))
        N_n = scale_arg(E.polys[2 * n + 1], Fraction(1, 2)) * (Fraction(2 ** (2 * n + 2)) / F(2 * n + 1))
        rep.check(f"euler:scaled-N[{n}]", literal[n] * (2 / F(2 * n + 1)) - N_n)


def _even_example(ctx: QContext, N: int, family: Family, kind: str, suite: str, kernel: str) -> Report:
    rep = Report(suite, family.name, ctx.q, N)
    F = ctx.q_factorial
    order = 2 * N + 2
    fam = q_poly_family(ctx, kind, 2 * N + 2)
    E = q_poly_family(ctx, "euler_second", 2 * N + 2)
    etil_even = [E.polys[2 * n](0) for n in range(N + 2)]
    for n in range(N + 2):
        rep.check(f"E-even-at-0-is-delta[{2 * n}]", etil_even[n] - (1 if n == 0 else 0))
    if family == EVEN_I:
        gamma = [4 ** n * etil_even[n] for n in range(N + 2)]
    else:
        gamma = list(etil_even)
    rep.check("seed-is-unit", gamma == [1] + [0] * (N + 1))

    literal = _literal_image(fam, "even", N)
    for n in range(N + 1):
        rep.check(f"literal-value-at-0-is-seed[{n}]", literal[n](0) - gamma[n])
    _membership(rep, ctx, family, fam, N, gamma)

    rep.check("h-is-one", seed_series(ctx, family, gamma, order) == TruncSeries.one(order))
    member = build_from_seed(ctx, family, gamma, N)
    rep.extend(verify_defining_system(ctx, family, member, gamma), "member:")
    conj = conjugate_seed(ctx, family, gamma, N + 1)
    rep.check("conjugate-seed-coincides", list(conj.values) == gamma)
    hat = build_from_seed(ctx, family, conj, N)
    K = q_hyper_series(ctx, kernel, Poly.z(), order)
    for n in range(N + 1):
        rep.check(f"{kernel}-coefficient[{n}]", K[2 * n] - member[n] / F(2 * n))
        rep.check(f"conjugate-{kernel}-coefficient[{n}]", K[2 * n] - hat[n] / F(2 * n))
    _gf_clauses(rep, ctx, family, gamma, N, "member-gf:")
    return rep


EXAMPLES = ("ex1", "ex2", "ex3", "ex4")


def example_suite(ctx: QContext, which: str, N: int) -> Report:
    """Run one worked example.

    Clauses prefixed ``literal-membership`` (and the Appell precondition
    clauses) test the example's polynomial sequence exactly as defined from
    the Bernoulli or Euler polynomials; the rest test the class member built
    from the stated seed and the stated generating functions.
    """
    if which == "ex1":
        return _ex1(ctx, N)
    if which == "ex2":
        return _ex2(ctx, N)
    if which == "ex3":
        return _even_example(ctx, N, EVEN_I, "euler_first", "ex3", "cosh")
    if which == "ex4":
        return _even_example(ctx, N, EVEN_II, "euler_second", "ex4", "Cosh")
    raise ValueError(f"unknown example {which!r}")
