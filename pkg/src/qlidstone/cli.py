"""Command-line front end.

Exit codes: 0 success, 1 a verification clause failed (the report is still
printed), 2 usage error.  Output is deterministic for a given argument
vector; random seeds are drawn only from ``--rng-seed``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import lidstone as L
from .families import EXAMPLES, example_suite, number_kind, q_number_table
from .qcore import QContext, format_rational
from .qpoly import Poly, render_latex, sparse_terms
from .report import Report
from .suites import SUITES, run_suite

METHODS = {
    "series": L.build_from_seed,
    "recurrence": L.build_by_recurrence1,
    "determinant": L.build_by_determinant,
    "production": L.build_by_production,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_rational(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{flag}: {text!r} is not an exact rational like 3 or 2/5") from None


def parse_seed(text: str) -> list[Fraction]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise UsageError("--seed: need at least one value")
    return [parse_rational(p, "--seed") for p in parts]


def make_context(text: str) -> QContext:
    q = parse_rational(text, "--q")
    try:
        return QContext(q)
    except ValueError as exc:
        raise UsageError(f"--q: {exc}") from None


# emitters


def polys_document(family: str, q: Fraction, polys, start: int = 0) -> dict:
    return {
        "family": family,
        "q": format_rational(q),
        "polys": [
            {"n": start + n, "coeffs": [[m, format_rational(c)] for m, c in sparse_terms(p)]}
            for n, p in enumerate(polys)
        ],
    }


def emit_polys(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "power", "coeff"])
        for entry in doc["polys"]:
            for m, c in entry["coeffs"]:
                w.writerow([entry["n"], m, c])
        return buf.getvalue()
    lines = []
    for entry in doc["polys"]:
        p = Poly.constant(0)
        for m, c in entry["coeffs"]:
            p = p + Poly.monomial(m, Fraction(c))
        lines.append(f"L_{{{entry['n']}}}(z) &= {render_latex(p)} \\\\")
    return "\\begin{align*}\n" + "\n".join(lines) + "\n\\end{align*}\n"


def numbers_rows(table) -> list[dict]:
    return [{"n": n, "index": i, "value": format_rational(v)} for n, i, v in table.rows()]


def emit_rows(kind: str, q: Fraction, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"kind": kind, "q": format_rational(q), "rows": rows}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "index", "value"])
        for r in rows:
            w.writerow([r["n"], r["index"], r["value"]])
        return buf.getvalue()
    body = []
    for r in rows:
        v = Fraction(r["value"])
        tex = str(v.numerator) if v.denominator == 1 else rf"\frac{{{v.numerator}}}{{{v.denominator}}}"
        body.append(f"{r['n']} & {r['index']} & {tex} \\\\")
    return "\\begin{tabular}{rrr}\nn & index & value \\\\\n" + "\n".join(body) + "\n\\end{tabular}\n"


def emit_reports(reports: list[Report]) -> str:
    doc = {"passed": all(r.passed for r in reports), "reports": [r.to_dict() for r in reports]}
    return json.dumps(doc, indent=2) + "\n"


# verbs


def _family(args) -> L.Family:
    try:
        return L.family_by_name(args.family)
    except ValueError as exc:
        raise UsageError(f"--family: {exc}") from None


def cmd_generate(args, out) -> int:
    ctx, fam, seed = make_context(args.q), _family(args), parse_seed(args.seed)
    if len(seed) < args.n + 1:
        raise UsageError(f"--seed: {len(seed)} values given, --n {args.n} needs {args.n + 1}")
    polys = METHODS[args.method](ctx, fam, seed, args.n)
    out.write(emit_polys(polys_document(fam.name, ctx.q, polys), args.format))
    return 0


def cmd_conjugate(args, out) -> int:
    ctx, fam, seed = make_context(args.q), _family(args), parse_seed(args.seed)
    if len(seed) < args.n + 1:
        raise UsageError(f"--seed: {len(seed)} values given, --n {args.n} needs {args.n + 1}")
    conj = L.conjugate_seed(ctx, fam, seed, args.n)
    if args.format == "json":
        doc = polys_document(fam.name, ctx.q, L.build_from_seed(ctx, fam, conj, args.n))
        doc["seed"] = [format_rational(v) for v in seed[: args.n + 1]]
        doc["conjugate"] = [format_rational(v) for v in conj.values]
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        rows = [{"n": n, "index": 2 * n, "value": format_rational(v)} for n, v in enumerate(conj.values)]
        out.write(emit_rows(f"conjugate-{fam.name}", ctx.q, rows, args.format))
    return 0


def cmd_numbers(args, out) -> int:
    ctx = make_context(args.q)
    try:
        kind = number_kind(args.kind)
    except ValueError as exc:
        raise UsageError(f"--kind: {exc}") from None
    if args.n < 1:
        raise UsageError("--n: numbers needs at least one row")
    table = q_number_table(ctx, kind, args.n - 1)
    out.write(emit_rows(kind, ctx.q, numbers_rows(table), args.format))
    return 0


def cmd_verify(args, out) -> int:
    ctx = make_context(args.q)
    if args.suite not in SUITES + ("all",):
        raise UsageError(f"--suite: choose from {', '.join(SUITES + ('all',))}")
    families = L.FAMILIES if args.family in (None, "all") else (_family(args),)
    reports = run_suite(args.suite, ctx, args.n, random.Random(args.rng_seed), families, args.seeds)
    out.write(emit_reports(reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_gf_check(args, out) -> int:
    ctx, fam, seed = make_context(args.q), _family(args), parse_seed(args.seed)
    order = 2 * args.n + 2
    if len(seed) < order // 2 + 1:
        raise UsageError(f"--seed: the t^{order} check needs {order // 2 + 1} values")
    rep = L.gf_check(ctx, fam, seed, args.n)
    out.write(emit_reports([rep]))
    return 0 if rep.passed else 1


def cmd_examples(args, out) -> int:
    ctx = make_context(args.q)
    which = EXAMPLES if args.which == "all" else (args.which,)
    reports = [example_suite(ctx, w, args.n) for w in which]
    out.write(emit_reports(reports))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qlidstone", description="Exact q-Lidstone polynomial toolkit")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, n_default=5, formats=("json", "csv", "latex")):
        sp.add_argument("--q", default="1/2", help="base q as an exact rational, 0 < q <= 1")
        sp.add_argument("--n", type=int, default=n_default, help="largest index")
        if formats:
            sp.add_argument("--format", choices=formats, default="json")

    g = sub.add_parser("generate", help="build a polynomial family from a seed")
    g.add_argument("--family", required=True, help="odd1 | even1 | odd2 | even2")
    g.add_argument("--seed", required=True, help="comma-separated rationals")
    g.add_argument("--method", choices=tuple(METHODS), default="series")
    common(g)

    c = sub.add_parser("conjugate", help="conjugate seed and family")
    c.add_argument("--family", required=True)
    c.add_argument("--seed", required=True)
    common(c)

    nb = sub.add_parser("numbers", help="tables of q-numbers (see --kind)")
    nb.add_argument("--kind", required=True, help="qbernoulli | qtangent | qeuler")
    common(nb)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)} or all")
    v.add_argument("--family", default=None, help="restrict family suites to one family")
    v.add_argument("--rng-seed", type=int, default=0)
    v.add_argument("--seeds", type=int, default=2, help="random seeds per family")
    common(v, formats=())

    gf = sub.add_parser("gf-check", help="generating-function coefficient check")
    gf.add_argument("--family", required=True)
    gf.add_argument("--seed", required=True)
    common(gf, formats=())

    ex = sub.add_parser("examples", help="run the worked example suites")
    ex.add_argument("--which", choices=EXAMPLES + ("all",), default="all")
    common(ex, n_default=4, formats=())
    return p


HANDLERS = {
    "generate": cmd_generate,
    "conjugate": cmd_conjugate,
    "numbers": cmd_numbers,
    "verify": cmd_verify,
    "gf-check": cmd_gf_check,
    "examples": cmd_examples,
}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "n", 0) < 0:
            raise UsageError("--n: must be >= 0")
        return HANDLERS[args.verb](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except (L.ZeroLeadSeed, L.SeedTooShort, L.DegenerateProduction) as exc:
        err.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
