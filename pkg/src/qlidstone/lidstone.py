"""The four q-Lidstone classes: odd/even polynomial sequences driven by
``D_q`` (type I) or ``D_{1/q}`` (type II).

Every family is described by a weight ``w_j`` (``[2j+1]_q!`` for odd,
``[2j]_q!`` for even) and a q-power ``q**e(k)`` attached to the ``k``-th
monomial (``e = 0`` for type I, ``k(2k+1)`` for odd/II, ``k(2k-1)`` for
even/II).  With ``a_j = seed_j / w_j`` the polynomials are

    L_n = w_n * sum_k a_{n-k} * q**e(k) * z**deg(k) / w_k,

and the conjugate seed is the one whose scaled values ``b_j = conj_j / w_j``
form the reciprocal power series of ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .matrices import Matrix, SingularToeplitz, TriMatrix, det_bareiss, toeplitz
from .qcore import QContext, RationalLike, as_rational
from .qpoly import EVEN, ODD, Poly, dq, dq_inv, dq_power, q_integral, scale_arg
from .qseries import TruncSeries, q_exp_series, q_hyper_series, series_mul, series_reciprocal
from .report import Report


class SeedTooShort(ValueError):
    pass


class ZeroLeadSeed(ValueError):
    pass


class DegenerateProduction(ZeroDivisionError):
    pass


class PreconditionFailed(ValueError):
    pass


@dataclass(frozen=True)
class Family:
    parity: str  # "odd" or "even"
    kind: str  # "I" or "II"

    def __post_init__(self):
        if self.parity not in (ODD, EVEN) or self.kind not in ("I", "II"):
            raise ValueError(f"bad family {self.parity}/{self.kind}")

    @property
    def name(self) -> str:
        return f"{self.parity}{1 if self.kind == 'I' else 2}"

    @property
    def inverse_base(self) -> bool:
        return self.kind == "II"

    def __str__(self):
        return self.name

    def weight(self, ctx: QContext, j: int) -> Fraction:
        return ctx.q_factorial(2 * j + 1 if self.parity == ODD else 2 * j)

    def degree(self, n: int) -> int:
        return 2 * n + 1 if self.parity == ODD else 2 * n

    def q_exponent(self, k: int) -> int:
        if self.kind == "I":
            return 0
        return k * (2 * k + 1) if self.parity == ODD else k * (2 * k - 1)

    def derivative(self, ctx: QContext, p: Poly) -> Poly:
        return dq_inv(ctx, p) if self.inverse_base else dq(ctx, p)

    def derivative_power(self, ctx: QContext, p: Poly, k: int) -> Poly:
        return dq_power(ctx, p, k, inverse_base=self.inverse_base)

    def monomial(self, ctx: QContext, k: int) -> Poly:
        """``q**e(k) z**deg(k)``: the basis element the family's ``k``-th
        column multiplies in the series formula."""
        return Poly.monomial(self.degree(k), ctx.power(self.q_exponent(k)))


ODD_I = Family(ODD, "I")
EVEN_I = Family(EVEN, "I")
ODD_II = Family(ODD, "II")
EVEN_II = Family(EVEN, "II")
FAMILIES = (ODD_I, EVEN_I, ODD_II, EVEN_II)
_BY_NAME = {f.name: f for f in FAMILIES}


def family_by_name(name: str) -> Family:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(_BY_NAME)}") from None


@dataclass(frozen=True)
class Seed:
    """Prefix ``values[k] = seed_{2k}`` of a numerical sequence."""

    values: tuple
    family: Family

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_rational(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]


SeedLike = Union[Seed, Sequence[RationalLike]]


def _values(seed: SeedLike, need: int) -> list[Fraction]:
    vals = list(seed.values) if isinstance(seed, Seed) else [as_rational(v) for v in seed]
    if len(vals) < need:
        raise SeedTooShort(f"seed has {len(vals)} values, {need} needed")
    if vals[0] == 0:
        raise ZeroLeadSeed("the first seed value must be nonzero")
    return vals


def _scaled(ctx: QContext, family: Family, vals: Sequence[Fraction]) -> list[Fraction]:
    return [v / family.weight(ctx, j) for j, v in enumerate(vals)]


@dataclass(frozen=True)
class ConjugatePair:
    seed: Seed
    conjugate: Seed

    def residuals(self, ctx: QContext) -> list[Fraction]:
        """``sum_j conj_j seed_{n-j} / (w_j w_{n-j}) - delta_{n0}`` per ``n``."""
        fam = self.seed.family
        n = min(len(self.seed), len(self.conjugate))
        a = _scaled(ctx, fam, self.seed.values[:n])
        b = _scaled(ctx, fam, self.conjugate.values[:n])
        return [sum((b[j] * a[m - j] for j in range(m + 1)), Fraction(0)) - (1 if m == 0 else 0)
                for m in range(n)]


# construction from the seed


def build_from_seed(ctx: QContext, family: Family, seed: SeedLike, N: int) -> list[Poly]:
    vals = _values(seed, N + 1)
    a = _scaled(ctx, family, vals)
    out = []
    for n in range(N + 1):
        wn = family.weight(ctx, n)
        p = Poly()
        for k in range(n + 1):
            if a[n - k]:
                p = p + family.monomial(ctx, k) * (wn * a[n - k] / family.weight(ctx, k))
        out.append(p)
    return out


def defining_constant(ctx: QContext, family: Family, n: int) -> Fraction:
    """Constant in ``D^2 L_n = c_n L_{n-1}``: ``[2n+1][2n]`` or ``[2n][2n-1]``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return family.weight(ctx, n) / family.weight(ctx, n - 1)


def verify_defining_system(ctx: QContext, family: Family, polys: Sequence[Poly],
                           seed: Optional[SeedLike] = None) -> Report:
    rep = Report("defining", family.name, ctx.q, len(polys) - 1)
    vals = None if seed is None else list(seed.values if isinstance(seed, Seed) else map(as_rational, seed))
    D = lambda p: family.derivative(ctx, p)  # noqa: E731
    for n, p in enumerate(polys):
        if n >= 1:
            rep.check(f"second-difference[{n}]", D(D(p)) - polys[n - 1] * defining_constant(ctx, family, n))
        if family.parity == ODD:
            rep.check(f"vanishes-at-0[{n}]", p(0))
            if vals is not None and n < len(vals):
                rep.check(f"slope-at-0[{n}]", D(p)(0) - vals[n])
        else:
            rep.check(f"flat-at-0[{n}]", D(p)(0))
            if vals is not None and n < len(vals):
                rep.check(f"value-at-0[{n}]", p(0) - vals[n])
        rep.check(f"degree[{n}]", p.degree == family.degree(n))
        # the residual is the part of p with the wrong parity
        wrong = 0 if family.parity == ODD else 1
        rep.check(f"parity[{n}]", Poly(c if m % 2 == wrong else 0 for m, c in enumerate(p.coeffs)))
        wn = family.weight(ctx, n)
        for m in range(2, n + 1):
            lhs = family.derivative_power(ctx, p, 2 * m)
            rep.check(f"iterated-difference[{n},{m}]", lhs - polys[n - m] * (wn / family.weight(ctx, n - m)))
    return rep


# conjugate seeds


def conjugate_seed(ctx: QContext, family: Family, seed: SeedLike, N: int) -> Seed:
    """Forward substitution in the convolution with Kronecker right side."""
    vals = _values(seed, N + 1)
    a = _scaled(ctx, family, vals[: N + 1])
    b = [1 / a[0]]
    for m in range(1, N + 1):
        b.append(-sum((b[j] * a[m - j] for j in range(m)), Fraction(0)) / a[0])
    return Seed([bj * family.weight(ctx, j) for j, bj in enumerate(b)], family)


def conjugate_seed_cramer(ctx: QContext, family: Family, seed: SeedLike, N: int) -> Seed:
    """Same values through determinants of the Hessenberg system matrix:
    ``conj_n = (-1)^n (prod_{m<=n} w_m) / seed_0^(n+1) * det H_n`` with
    ``H_n[m-1][j] = seed_{m-j} / (w_j w_{m-j})`` for ``m = 1..n``."""
    vals = _values(seed, N + 1)
    w = [family.weight(ctx, j) for j in range(N + 1)]
    out = []
    for n in range(N + 1):
        H = [[vals[m - j] / (w[j] * w[m - j]) if j <= m else Fraction(0) for j in range(n)]
             for m in range(1, n + 1)]
        wprod = Fraction(1)
        for m in range(n + 1):
            wprod *= w[m]
        out.append((-1) ** n * wprod / vals[0] ** (n + 1) * det_bareiss(H))
    return Seed(out, family)


def conjugate_pair(ctx: QContext, family: Family, seed: SeedLike, N: int) -> ConjugatePair:
    s = Seed(_values(seed, N + 1)[: N + 1], family)
    return ConjugatePair(s, conjugate_seed(ctx, family, s, N))


def build_conjugate_family(ctx: QContext, family: Family, seed: SeedLike, N: int) -> list[Poly]:
    return build_from_seed(ctx, family, conjugate_seed(ctx, family, seed, N), N)


# matrices


def lidstone_matrix(ctx: QContext, family: Family, seed: SeedLike, n: int) -> TriMatrix:
    """``(n+1) x (n+1)`` matrix ``A`` with ``P = A Z``, ``Z`` the plain monomials."""
    a = _scaled(ctx, family, _values(seed, n + 1))
    w = [family.weight(ctx, j) for j in range(n + 1)]
    return TriMatrix.from_function(
        n + 1, lambda i, j: w[i] * a[i - j] * ctx.power(family.q_exponent(j)) / w[j] if i >= j else 0)


def inverse_matrix(ctx: QContext, family: Family, seed: SeedLike, n: int) -> TriMatrix:
    """Closed form of ``A^{-1}``: ``diag(w) Q^{-1} T_conj diag(w)^{-1}``.

    For type I this is the matrix of the conjugate seed.  For type II the
    q-power sits on the row index with a negative exponent."""
    conj = conjugate_seed(ctx, family, seed, n)
    b = _scaled(ctx, family, conj.values)
    w = [family.weight(ctx, j) for j in range(n + 1)]
    return TriMatrix.from_function(
        n + 1, lambda i, j: w[i] * b[i - j] * ctx.power(-family.q_exponent(i)) / w[j] if i >= j else 0)


def toeplitz_factorization(ctx: QContext, family: Family, seed: SeedLike, n: int):
    """``(Dg, T, R)`` with ``Dg = diag(w)``, ``T`` Toeplitz in ``seed_k/w_k``
    and ``R = Q diag(w)^{-1}``, so ``Dg @ T @ R`` is the Lidstone matrix.
    ``Q = diag(q**e(j))`` is the identity for type I."""
    a = _scaled(ctx, family, _values(seed, n + 1))
    w = [family.weight(ctx, j) for j in range(n + 1)]
    Dg = TriMatrix(Matrix.diagonal(w).rows)
    T = toeplitz(a[: n + 1], n + 1)
    R = TriMatrix(Matrix.diagonal([ctx.power(family.q_exponent(j)) / w[j] for j in range(n + 1)]).rows)
    return Dg, T, R


def production_rows(ctx: QContext, family: Family, seed: SeedLike, n: int) -> list[list[Fraction]]:
    """Rows ``0..n`` of ``A D A^{-1}`` with columns ``0..n+1``.

    Row ``i`` of ``A D B`` only touches rows ``<= i+1`` of ``B``, so a
    truncation of size ``n+2`` gives every returned entry exactly.
    """
    size = n + 2
    A = lidstone_matrix(ctx, family, seed, size - 1)
    B = inverse_matrix(ctx, family, seed, size - 1)
    P = A @ Matrix.shift(size) @ B
    return [list(P.rows[i][: n + 2]) for i in range(n + 1)]


def production_matrix(ctx: QContext, family: Family, seed: SeedLike, n: int) -> Matrix:
    """``(n+1) x (n+1)`` block of the production matrix ``A D A^{-1}``
    (lower Hessenberg).  Needs the seed through index ``n+1``."""
    rows = production_rows(ctx, family, seed, n)
    return Matrix([r[: n + 1] for r in rows])


PRINTED_PRODUCTION = ("odd1", "even1", "odd2")


def production_closed_form(ctx: QContext, family: Family, seed: SeedLike, n: int,
                           variant: str = "derived") -> Matrix:
    """Closed-form production entries for ``i, j <= n``.

    ``derived``: the sum ``sum_k A[i,k] B[k+1,j]`` written out in seed
    terms; valid for all four families.

    ``printed``: the published single-sum forms (odd/I, even/I, odd/II),
    reading the unbracketed denominator factor as a q-integer.

    ``printed_integer``: as ``printed`` but with that factor read as an
    ordinary integer (odd families only).
    """
    vals = _values(seed, n + 2)
    conj = conjugate_seed(ctx, family, vals, n + 1).values
    w = [family.weight(ctx, j) for j in range(n + 3)]
    e = family.q_exponent

    def alpha(k):
        return vals[k] if 0 <= k < len(vals) else Fraction(0)

    def beta(k):
        return conj[k] if 0 <= k < len(conj) else Fraction(0)

    if variant == "derived":
        a = [alpha(k) / w[k] for k in range(n + 2)]
        b = [beta(k) / w[k] for k in range(n + 2)]

        def entry(i, j):
            s = Fraction(0)
            for k in range(max(j - 1, 0), i + 1):
                s += a[i - k] * (w[k + 1] / w[k]) * ctx.power(e(k) - e(k + 1)) * b[k + 1 - j]
            return w[i] * s / w[j]

        return Matrix.from_function(n + 1, entry)

    if variant not in ("printed", "printed_integer"):
        raise ValueError(f"unknown variant {variant!r}")
    if family.name not in PRINTED_PRODUCTION:
        raise ValueError(f"no printed production formula for {family.name}")
    if family.parity == EVEN:
        if variant == "printed_integer":
            raise ValueError("the even formula has no unbracketed factor")

        def entry(i, j):
            if j > i + 1:
                return Fraction(0)
            return sum((ctx.q_binomial(2 * i, 2 * m) * ctx.q_binomial(2 * (m + 1), 2 * j)
                        * alpha(i - m) * beta(m - j + 1) for m in range(i + 1)), Fraction(0))

        return Matrix.from_function(n + 1, entry)

    F = ctx.q_factorial

    def entry(i, j):
        if i == j == 0:
            return alpha(0) * beta(1)
        if j > i + 1:
            return Fraction(0)
        s = Fraction(0)
        for m in range(i - j + 2):
            c = ctx.q_binomial(2 * i + 1, 2 * (m + j) - 1)
            if not c:
                continue
            if family.kind == "II":
                c *= ctx.power((m + j - 1) * (2 * (m + j) - 1))
            d = 2 * (i - j - m) + 3
            d = ctx.q_int(d) if variant == "printed" else Fraction(d)
            s += c * beta(m) * alpha(i - j - m + 1) * F(2 * (m + j) + 1) / (d * F(2 * j + 1) * F(2 * m + 1))
        return s

    return Matrix.from_function(n + 1, entry)


# alternative constructors


def build_by_recurrence1(ctx: QContext, family: Family, seed: SeedLike, N: int,
                         variant: str = "derived") -> list[Poly]:
    """Monomial-minus-lower-terms recurrence from ``Z = A^{-1} P``:

        L_n = (q**e(n) z**deg(n) - sum_{k<n} w_n c_{n-k} / (w_{n-k} w_k) L_k) / c_0.

    ``variant="printed"`` uses the published type-II shape
    ``q**(-e(n)) / c_0 * [z**deg(n) - sum_k ... q**e(k) ... L_k]``, kept
    only to document that it disagrees.
    """
    conj = conjugate_seed(ctx, family, seed, N).values
    c = _scaled(ctx, family, conj)
    out: list[Poly] = []
    for n in range(N + 1):
        wn = family.weight(ctx, n)
        acc = Poly()
        for k in range(n):
            coeff = wn * c[n - k] / family.weight(ctx, k)
            if variant == "printed":
                coeff *= ctx.power(family.q_exponent(k))
            acc = acc + out[k] * coeff
        if variant == "printed":
            p = (Poly.monomial(family.degree(n)) - acc) * (ctx.power(-family.q_exponent(n)) / conj[0])
        elif variant == "derived":
            p = (family.monomial(ctx, n) - acc) / conj[0]
        else:
            raise ValueError(f"unknown variant {variant!r}")
        out.append(p)
    return out


def build_by_determinant(ctx: QContext, family: Family, seed: SeedLike, N: int) -> list[Poly]:
    """Cramer's rule on ``B P = Z`` (``B = A^{-1}``) arranged with the
    monomials in the first row:

        L_n = (-1)^n det(M) / (prod_{k<n} s_k * prod_{k<=n} B[k,k]),

    where row ``k+1`` of ``M`` holds ``s_k B[m,k]`` for ``m = 0..n`` and
    ``s_k = [2k+1]_q!`` (odd) or ``1`` (even).  The determinant is expanded
    along the monomial row with exact numeric minors.
    """
    B = inverse_matrix(ctx, family, seed, N)
    s = [family.weight(ctx, k) if family.parity == ODD else Fraction(1) for k in range(N + 1)]
    out = []
    for n in range(N + 1):
        rows = [[s[k] * B[m, k] for m in range(n + 1)] for k in range(n)]
        det = Poly()
        for m in range(n + 1):
            minor = [r[:m] + r[m + 1:] for r in rows]
            d = det_bareiss(minor)
            if d:
                det = det + Poly.monomial(family.degree(m), (-1) ** m * d)
        denom = Fraction(1)
        for k in range(n):
            denom *= s[k]
        for k in range(n + 1):
            denom *= B[k, k]
        out.append(det * ((-1) ** n / denom))
    return out


def build_by_production(ctx: QContext, family: Family, seed: SeedLike, N: int) -> list[Poly]:
    """``L_{n+1} = (z^2 L_n - sum_{k<=n} pi[n,k] L_k) / pi[n,n+1]``."""
    vals = _values(seed, N + 1)
    out = [family.monomial(ctx, 0) * vals[0]]
    if N == 0:
        return out
    rows = production_rows(ctx, family, vals, N - 1)
    z2 = Poly.monomial(2)
    for n in range(N):
        sup = rows[n][n + 1]
        if sup == 0:
            raise DegenerateProduction(f"pi[{n},{n + 1}] = 0")
        acc = z2 * out[n]
        for k in range(n + 1):
            if rows[n][k]:
                acc = acc - out[k] * rows[n][k]
        out.append(acc / sup)
    return out


def production_eigen_residuals(ctx: QContext, family: Family, seed: SeedLike, n: int) -> list[Poly]:
    """``(Pi P)_i - z^2 P_i`` for ``i = 0..n``; all zero when the
    production matrix is right."""
    rows = production_rows(ctx, family, seed, n)
    polys = build_from_seed(ctx, family, seed, n + 1)
    z2 = Poly.monomial(2)
    out = []
    for i in range(n + 1):
        acc = Poly()
        for k in range(i + 2):
            if rows[i][k]:
                acc = acc + polys[k] * rows[i][k]
        out.append(acc - z2 * polys[i])
    return out


# q-difference equations


def first_equation_residual(ctx: QContext, family: Family, u: Poly, n: int, conj: SeedLike) -> Poly:
    """``sum_k conj_k / w_k D^{2k} u - q**e(n) z**deg(n)``."""
    vals = list(conj.values if isinstance(conj, Seed) else map(as_rational, conj))
    acc = Poly()
    d = u
    for k in range(n + 1):
        if k:
            d = family.derivative_power(ctx, d, 2)
        acc = acc + d * (vals[k] / family.weight(ctx, k))
    return acc - family.monomial(ctx, n)


def printed_corollary_residual(ctx: QContext, u: Poly, n: int, conj: SeedLike) -> Poly:
    """The published odd type-II equation with weights
    ``q**((n-k+1)(2n-2k+3))`` and a bare ``z**(2n+1)``."""
    vals = list(conj.values if isinstance(conj, Seed) else map(as_rational, conj))
    acc = Poly()
    for k in range(n + 1):
        term = dq_power(ctx, u, 2 * k, inverse_base=True)
        acc = acc + term * (vals[k] / ctx.q_factorial(2 * k + 1) * ctx.power((n - k + 1) * (2 * n - 2 * k + 3)))
    return acc - Poly.monomial(2 * n + 1)


def second_equation_residual(ctx: QContext, family: Family, u: Poly, n: int, rows) -> Poly:
    """``(w_{n+1}/w_n) pi[n,n+1] u - D^2(z^2 u) + sum_{k=1}^n (w_k/w_n) pi[n,k] D^{2(n-k+1)} u``."""
    w = family.weight
    res = u * (w(ctx, n + 1) / w(ctx, n) * rows[n][n + 1])
    res = res - family.derivative_power(ctx, u.shift_power(2), 2)
    for k in range(1, n + 1):
        if rows[n][k]:
            res = res + family.derivative_power(ctx, u, 2 * (n - k + 1)) * (w(ctx, k) / w(ctx, n) * rows[n][k])
    return res


def verify_qdiffeq(ctx: QContext, family: Family, polys: Sequence[Poly], conj: SeedLike,
                   production=None) -> Report:
    """Check both q-difference equations for ``u = L_n``.

    ``production`` may be a :class:`Matrix` or a list of Hessenberg rows;
    the second equation is checked for every ``n`` whose row reaches column
    ``n+1``.  If omitted it is rebuilt from the seed recovered as the
    conjugate of ``conj``.  For odd/II the published corollary is also
    evaluated and recorded as a finding when it disagrees.
    """
    N = len(polys) - 1
    rep = Report("qdiffeq", family.name, ctx.q, N)
    conj_vals = list(conj.values if isinstance(conj, Seed) else map(as_rational, conj))
    if production is None:
        seed = conjugate_seed(ctx, family, conj_vals, len(conj_vals) - 1)
        top = min(N, len(conj_vals) - 2)
        rows = production_rows(ctx, family, seed, top) if top >= 0 else []
    elif isinstance(production, Matrix):
        rows = [list(r) for r in production.rows]
    else:
        rows = [list(r) for r in production]
    for n, u in enumerate(polys):
        rep.check(f"first-equation[{n}]", first_equation_residual(ctx, family, u, n, conj_vals))
        if family == ODD_II:
            rep.check(f"printed-corollary[{n}]", printed_corollary_residual(ctx, u, n, conj_vals), finding=True)
        if n < len(rows) and len(rows[n]) > n + 1:
            rep.check(f"second-equation[{n}]", second_equation_residual(ctx, family, u, n, rows))
    return rep


# generating functions


def seed_series(ctx: QContext, family: Family, seed: SeedLike, order: int) -> TruncSeries:
    """``sum_j seed_j t^{2j} / w_j`` through ``t**order``."""
    vals = _values(seed, order // 2 + 1)
    cs = []
    for m in range(order + 1):
        cs.append(vals[m // 2] / family.weight(ctx, m // 2) if m % 2 == 0 else 0)
    return TruncSeries(cs)


def kernel_series(ctx: QContext, family: Family, order: int) -> TruncSeries:
    """``sum_k q**e(k) z**deg(k) t^{2k} / w_k``: ``sinh_q(zt)/t``,
    ``cosh_q(zt)``, ``Sinh_q(zt)/t`` or ``Cosh_q(zt)``."""
    name = {"odd1": "sinh", "even1": "cosh", "odd2": "Sinh", "even2": "Cosh"}[family.name]
    z = Poly.z()
    if family.parity == ODD:
        return q_hyper_series(ctx, name, z, order + 1).div_t()
    return q_hyper_series(ctx, name, z, order)


def gf_check(ctx: QContext, family: Family, seed: SeedLike, N: int, order: Optional[int] = None) -> Report:
    """Coefficient check of ``g(t) K(z,t) = sum L_n t^{2n} / w_n`` and of
    ``K(z,t) / g(t)`` against the conjugate family."""
    order = 2 * N + 2 if order is None else order
    rep = Report("gf", family.name, ctx.q, N)
    M = order // 2
    vals = _values(seed, M + 1)
    g = seed_series(ctx, family, vals, order)
    ginv = series_reciprocal(g)
    conj = conjugate_seed(ctx, family, vals, M)
    rep.check("reciprocal-is-conjugate", ginv == seed_series(ctx, family, conj, order))
    K = kernel_series(ctx, family, order)
    for label, series, polys in (
        ("family", series_mul(g, K), build_from_seed(ctx, family, vals, M)),
        ("conjugate", series_mul(ginv, K), build_from_seed(ctx, family, conj, M)),
    ):
        for m in range(order + 1):
            if m % 2:
                rep.check(f"{label}-odd-coefficient[{m}]", series[m])
            else:
                n = m // 2
                rep.check(f"{label}-coefficient[{n}]", series[m] - polys[n] / family.weight(ctx, n))
    return rep


# Appell sequences

APPELL_KINDS = {"I": "small_e", "I_small_e": "small_e", "II": "big_E", "II_big_E": "big_E"}


def _appell_kind(kind: str) -> str:
    try:
        return APPELL_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown Appell kind {kind!r}") from None


def appell_from_seed(ctx: QContext, kind: str, values: Sequence[RationalLike], N: int) -> list[Poly]:
    """``a_n = [n]_q! [t^n] A(t) e_q(zt)`` (kind I) or with ``E_q`` (kind II),
    ``A(t) = sum values_k t^k / [k]_q!``."""
    exp_kind = _appell_kind(kind)
    vals = [as_rational(v) for v in values]
    if len(vals) < N + 1:
        raise SeedTooShort(f"need {N + 1} Appell values")
    if vals[0] == 0:
        raise ZeroLeadSeed("the first Appell value must be nonzero")
    A = TruncSeries([vals[k] / ctx.q_factorial(k) for k in range(N + 1)])
    S = series_mul(A, q_exp_series(ctx, exp_kind, Poly.z(), N))
    return [S[n] * ctx.q_factorial(n) for n in range(N + 1)]


def appell_closed_form(ctx: QContext, kind: str, values: Sequence[RationalLike], N: int) -> list[Poly]:
    """``a_n = sum_k qbinom(n,k) w_k values_{n-k} z^k`` with ``w_k = 1``
    (kind I) or ``q**(k(k-1)/2)`` (kind II)."""
    exp_kind = _appell_kind(kind)
    vals = [as_rational(v) for v in values]
    out = []
    for n in range(N + 1):
        cs = []
        for k in range(n + 1):
            wk = ctx.power(k * (k - 1) // 2) if exp_kind == "big_E" else 1
            cs.append(ctx.q_binomial(n, k) * wk * vals[n - k])
        out.append(Poly(cs))
    return out


def appell_printed_characterization(ctx: QContext, values: Sequence[RationalLike], N: int) -> list[Poly]:
    """The published characterisation
    ``a_n = sum_k qbinom(n,k) q**C(n-k,2) values_k z^{n-k}``."""
    vals = [as_rational(v) for v in values]
    out = []
    for n in range(N + 1):
        p = Poly()
        for k in range(n + 1):
            p = p + Poly.monomial(n - k, ctx.q_binomial(n, k) * ctx.power((n - k) * (n - k - 1) // 2) * vals[k])
        out.append(p)
    return out


def appell_ladder_residuals(ctx: QContext, kind: str, polys: Sequence[Poly]) -> list[Poly]:
    """``D a_n - [n]_q a_{n-1}`` with ``D_q`` (kind I) or ``D_{1/q}`` (kind II)."""
    inverse = _appell_kind(kind) == "big_E"
    op = dq_inv if inverse else dq
    return [op(ctx, polys[n]) - polys[n - 1] * ctx.q_int(n) for n in range(1, len(polys))]


def appell_family(parity_: str, kind: str) -> Family:
    return Family(parity_, "II" if _appell_kind(kind) == "big_E" else "I")


def appell_to_lidstone(ctx: QContext, parity_: str, kind: str, appell_polys: Sequence[Poly]) -> list[Poly]:
    """``2^{2n+1} a_{2n+1}(z/2)`` (odd) or ``2^{2n} a_{2n}(z/2)`` (even).

    Both images need every odd-index Appell value ``a_{2n+1}(0)``,
    including ``a_1(0)``, to vanish; otherwise the image is not odd (or not
    flat at 0) and :class:`PreconditionFailed` is raised.
    """
    _appell_kind(kind)
    for m in range(1, len(appell_polys), 2):
        if appell_polys[m](0) != 0:
            raise PreconditionFailed(f"a_{m}(0) = {appell_polys[m](0)} is not zero")
    half = Fraction(1, 2)
    if parity_ == ODD:
        return [scale_arg(appell_polys[2 * n + 1], half) * 2 ** (2 * n + 1)
                for n in range((len(appell_polys)) // 2)]
    if parity_ == EVEN:
        return [scale_arg(appell_polys[2 * n], half) * 2 ** (2 * n)
                for n in range((len(appell_polys) + 1) // 2)]
    raise ValueError(f"bad parity {parity_!r}")


def appell_bridge_seed(ctx: QContext, parity_: str, appell_polys: Sequence[Poly]) -> list[Fraction]:
    """Seed of the bridged family: ``2^{2n}[2n+1]_q a_{2n}(0)`` (odd) or
    ``2^{2n} a_{2n}(0)`` (even)."""
    out = []
    for n in range((len(appell_polys) + 1) // 2):
        v = appell_polys[2 * n](0) * 2 ** (2 * n)
        out.append(v * ctx.q_int(2 * n + 1) if parity_ == ODD else v)
    return out


# small closed forms used by the property tests


def leading_coefficient(ctx: QContext, family: Family, seed: SeedLike, n: int) -> Fraction:
    vals = _values(seed, 1)
    return ctx.power(family.q_exponent(n)) * vals[0]


def integral_closed_form(ctx: QContext, seed: SeedLike, n: int) -> Fraction:
    """``[2n+1]! sum_k alpha_{n-k} / ([2k+2]! [2(n-k)+1]!)``: the Jackson
    integral over [0, 1] of the odd type-I polynomial ``p_n``."""
    vals = _values(seed, n + 1)
    F = ctx.q_factorial
    return F(2 * n + 1) * sum((vals[n - k] / (F(2 * k + 2) * F(2 * (n - k) + 1)) for k in range(n + 1)),
                              Fraction(0))


def jackson_integral(ctx: QContext, p: Poly) -> Fraction:
    return q_integral(ctx, p)


__all__ = [
    "SeedTooShort", "ZeroLeadSeed", "DegenerateProduction", "PreconditionFailed", "SingularToeplitz",
    "Family", "ODD_I", "EVEN_I", "ODD_II", "EVEN_II", "FAMILIES", "family_by_name",
    "Seed", "ConjugatePair", "build_from_seed", "defining_constant", "verify_defining_system",
    "conjugate_seed", "conjugate_seed_cramer", "conjugate_pair", "build_conjugate_family",
    "lidstone_matrix", "inverse_matrix", "toeplitz_factorization", "production_matrix",
    "production_closed_form", "production_rows", "build_by_recurrence1", "build_by_determinant", "build_by_production",
    "production_eigen_residuals", "verify_qdiffeq", "gf_check", "seed_series", "kernel_series",
    "appell_from_seed", "appell_closed_form", "appell_printed_characterization",
    "appell_ladder_residuals", "appell_to_lidstone", "appell_bridge_seed", "appell_family",
    "leading_coefficient", "integral_closed_form", "jackson_integral",
]
