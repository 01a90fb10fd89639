"""Verification suites shared by the command line and the acceptance tests.

Each suite takes a context, a family and a seed (or just a context) and
returns a :class:`Report`.  Random seeds come from an explicit
:class:`random.Random` so every run is reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from . import lidstone as L
from .families import classical_bernoulli, classical_euler_at_zero, classical_tangent, q_number_table, verify_im_identity
from .matrices import toeplitz_inverse_cramer, toeplitz_inverse_substitution
from .qcore import QContext
from .qpoly import Poly
from .report import Report


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if x or not nonzero:
            return x


def random_seed(rng: random.Random, length: int) -> list[Fraction]:
    return [random_rational(rng, nonzero=True)] + [random_rational(rng) for _ in range(length - 1)]


def random_appell_values(rng: random.Random, length: int, odd_vanishing: bool = False) -> list[Fraction]:
    vals = random_seed(rng, length)
    if odd_vanishing:
        vals = [v if k % 2 == 0 else Fraction(0) for k, v in enumerate(vals)]
    return vals


def defining_suite(ctx: QContext, family: L.Family, seed, N: int) -> Report:
    polys = L.build_from_seed(ctx, family, seed, N)
    rep = L.verify_defining_system(ctx, family, polys, seed)
    rep.suite = "defining"
    for n, p in enumerate(polys):
        rep.check(f"leading-coefficient[{n}]", p.leading() - L.leading_coefficient(ctx, family, seed, n))
        if family == L.ODD_I:
            rep.check(f"jackson-integral[{n}]", L.jackson_integral(ctx, p) - L.integral_closed_form(ctx, seed, n))
    return rep


def constructors_suite(ctx: QContext, family: L.Family, seed, N: int) -> Report:
    rep = Report("constructors", family.name, ctx.q, N)
    ref = L.build_from_seed(ctx, family, seed, N)
    for name, build in (("recurrence1", L.build_by_recurrence1), ("determinant", L.build_by_determinant),
                        ("production", L.build_by_production)):
        other = build(ctx, family, seed, N)
        for n in range(N + 1):
            rep.check(f"{name}[{n}]", other[n] - ref[n])
    if family.kind == "II":
        printed = L.build_by_recurrence1(ctx, family, seed, N, variant="printed")
        for n in range(N + 1):
            rep.check(f"printed-recurrence1[{n}]", printed[n] - ref[n], finding=True)
    return rep


def conjugation_suite(ctx: QContext, family: L.Family, seed, N: int, N_cramer: int | None = None) -> Report:
    rep = Report("conjugation", family.name, ctx.q, N)
    vals = list(seed)[: N + 1]
    conj = L.conjugate_seed(ctx, family, vals, N)
    back = L.conjugate_seed(ctx, family, conj, N)
    for n in range(N + 1):
        rep.check(f"involution[{n}]", back[n] - vals[n])
    pair = L.ConjugatePair(L.Seed(vals, family), conj)
    for n, r in enumerate(pair.residuals(ctx)):
        rep.check(f"convolution[{n}]", r)
    rep.check("first-value-reciprocal", conj[0] * vals[0] - 1)
    Nc = N if N_cramer is None else min(N, N_cramer)
    cramer = L.conjugate_seed_cramer(ctx, family, vals, Nc)
    for n in range(Nc + 1):
        rep.check(f"cramer[{n}]", cramer[n] - conj[n])
    return rep


def matrices_suite(ctx: QContext, family: L.Family, seed, n: int) -> Report:
    rep = Report("matrices", family.name, ctx.q, n)
    A = L.lidstone_matrix(ctx, family, seed, n)
    B = L.inverse_matrix(ctx, family, seed, n)
    rep.check("A-times-inverse", (A @ B).is_identity())
    rep.check("inverse-times-A", (B @ A).is_identity())
    rep.check("inverse-by-substitution", B == A.inverse())
    Dg, T, R = L.toeplitz_factorization(ctx, family, seed, n)
    rep.check("toeplitz-factorization", Dg @ T @ R == A)
    rep.check("toeplitz-cramer-inverse", toeplitz_inverse_cramer(T) == toeplitz_inverse_substitution(T))
    rep.check("toeplitz-inverse-product", (T @ toeplitz_inverse_substitution(T)).is_identity())
    polys = L.build_from_seed(ctx, family, seed, n)
    Z = [Poly.monomial(family.degree(k)) for k in range(n + 1)]
    rep.check("matrix-times-monomials", A.apply(Z) == polys)
    conj = L.conjugate_seed(ctx, family, seed, n)
    A_conj = L.lidstone_matrix(ctx, family, conj, n)
    if family.kind == "I":
        rep.check("A-times-conjugate-matrix", (A @ A_conj).is_identity())
        hat = L.build_from_seed(ctx, family, conj, n)
        rep.check("P-equals-A-squared-Phat", (A @ A).apply(hat) == polys)
    else:
        # the conjugate-seed matrix differs from the true inverse by the q-powers
        rep.check("A-times-conjugate-matrix", (A @ A_conj).is_identity(), finding=True)
    return rep


def production_suite(ctx: QContext, family: L.Family, seed, n: int) -> Report:
    rep = Report("production", family.name, ctx.q, n)
    Pi = L.production_matrix(ctx, family, seed, n)
    rep.check("hessenberg-zeros", all(Pi[i, j] == 0 for i in range(n + 1) for j in range(i + 2, n + 1)))
    rep.check("derived-closed-form", Pi == L.production_closed_form(ctx, family, seed, n, "derived"))
    if family.name in L.PRINTED_PRODUCTION:
        rep.check("printed-closed-form", Pi == L.production_closed_form(ctx, family, seed, n, "printed"),
                  finding=True)
        if family.parity == "odd":
            rep.check("printed-closed-form-integer-factor",
                      Pi == L.production_closed_form(ctx, family, seed, n, "printed_integer"), finding=True)
    for i, r in enumerate(L.production_eigen_residuals(ctx, family, seed, n)):
        rep.check(f"eigen-row[{i}]", r)
    if family.kind == "I":
        conj = L.conjugate_seed(ctx, family, seed, 1)
        rep.check("pi00-is-alpha0-beta2", Pi[0, 0] - seed[0] * conj[1])
    return rep


def qdiffeq_suite(ctx: QContext, family: L.Family, seed, N: int) -> Report:
    polys = L.build_from_seed(ctx, family, seed, N)
    conj = L.conjugate_seed(ctx, family, seed, N)
    rows = L.production_rows(ctx, family, seed, N)
    return L.verify_qdiffeq(ctx, family, polys, conj, rows)


def gf_suite(ctx: QContext, family: L.Family, seed, N: int) -> Report:
    return L.gf_check(ctx, family, seed, N)


def appell_suite(ctx: QContext, rng: random.Random, N: int, n_ladder: int = 8) -> Report:
    rep = Report("appell", "appell", ctx.q, N)
    for kind in ("I", "II"):
        vals = random_appell_values(rng, n_ladder + 1)
        a = L.appell_from_seed(ctx, kind, vals, n_ladder)
        for n, r in enumerate(L.appell_ladder_residuals(ctx, kind, a), start=1):
            rep.check(f"{kind}:ladder[{n}]", r)
        for n, (x, y) in enumerate(zip(a, L.appell_closed_form(ctx, kind, vals, n_ladder))):
            rep.check(f"{kind}:closed-form[{n}]", x - y)
            rep.check(f"{kind}:value-at-0[{n}]", x(0) - vals[n])
        printed = L.appell_printed_characterization(ctx, vals, n_ladder)
        for n in range(n_ladder + 1):
            # the printed characterisation carries the E_q weights
            rep.check(f"{kind}:printed-characterization[{n}]", printed[n] - a[n], finding=(kind == "I"))
        for parity_ in ("odd", "even"):
            fam = L.appell_family(parity_, kind)
            ev = random_appell_values(rng, 2 * N + 2, odd_vanishing=True)
            ap = L.appell_from_seed(ctx, kind, ev, 2 * N + 1)
            lid = L.appell_to_lidstone(ctx, parity_, kind, ap)[: N + 1]
            seed = L.appell_bridge_seed(ctx, parity_, ap)
            sub = L.verify_defining_system(ctx, fam, lid, seed)
            rep.extend(sub, f"{kind}:bridge-{fam.name}:")
            ref = L.build_from_seed(ctx, fam, seed, N)
            for n in range(N + 1):
                rep.check(f"{kind}:bridge-{fam.name}:series-formula[{n}]", lid[n] - ref[n])
    return rep


def classical_suite(N: int = 4) -> Report:
    """At ``q = 1``: the defining system with the ordinary derivative, and
    the number tables against the classical Bernoulli oracle."""
    ctx = QContext(1)
    rep = Report("classical", "all", ctx.q, N)
    B = classical_bernoulli(2 * N + 2)
    beta = q_number_table(ctx, "q_bernoulli", N).values
    tan = q_number_table(ctx, "q_tangent", N).values
    et = q_number_table(ctx, "q_euler_tilde", N).values
    for n in range(N + 1):
        rep.check(f"bernoulli[{2 * n}]", beta[n] - B[2 * n])
        rep.check(f"tangent[{2 * n + 1}]", tan[n] - classical_tangent(n))
        rep.check(f"euler-at-0[{2 * n + 1}]", et[n] - classical_euler_at_zero(2 * n + 1))
    rng = random.Random(0)
    for family in L.FAMILIES:
        seed = random_seed(rng, N + 1)
        polys = L.build_from_seed(ctx, family, seed, N)
        for n in range(1, N + 1):
            d2 = _formal_derivative(_formal_derivative(polys[n]))
            c = family.degree(n) * (family.degree(n) - 1)
            rep.check(f"{family.name}:second-derivative[{n}]", d2 - polys[n - 1] * c)
    return rep


def _formal_derivative(p: Poly) -> Poly:
    return Poly(m * c for m, c in enumerate(p.coeffs) if m)


FAMILY_SUITES = {
    "defining": defining_suite,
    "constructors": constructors_suite,
    "conjugation": conjugation_suite,
    "matrices": matrices_suite,
    "production": production_suite,
    "qdiffeq": qdiffeq_suite,
    "gf": gf_suite,
}
GLOBAL_SUITES = ("im", "appell", "classical")
SUITES = tuple(FAMILY_SUITES) + GLOBAL_SUITES


def run_suite(name: str, ctx: QContext, N: int, rng: random.Random,
              families: Sequence[L.Family] = L.FAMILIES, seeds_per_family: int = 2) -> list[Report]:
    """Run one named suite (or ``all``) and return its reports."""
    names = SUITES if name == "all" else (name,)
    out: list[Report] = []
    for s in names:
        if s in FAMILY_SUITES:
            for family in families:
                for _ in range(seeds_per_family):
                    seed = random_seed(rng, N + 3)
                    out.append(FAMILY_SUITES[s](ctx, family, seed, N))
        elif s == "im":
            out.append(verify_im_identity(ctx, N))
        elif s == "appell":
            out.append(appell_suite(ctx, rng, N))
        elif s == "classical":
            out.append(classical_suite(N))
        else:
            raise ValueError(f"unknown suite {s!r}")
    return out
