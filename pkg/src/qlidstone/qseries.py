"""Truncated power series in ``t`` whose coefficients are polynomials in ``z``.

A :class:`TruncSeries` of order ``N`` stores the coefficients of
``t**0 .. t**N`` and says nothing about higher powers.  Every operation
returns a series whose order is no larger than what its inputs justify.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .qcore import QContext, RationalLike, as_rational
from .qpoly import Poly


class ZeroConstantTerm(ArithmeticError):
    """A series was divided by although its constant coefficient is zero
    or depends on ``z``."""


PolyLike = Union[Poly, int, str, Fraction]


def _as_poly(x: PolyLike) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([as_rational(x)])


class TruncSeries:
    """Immutable ``sum(coeffs[j] * t**j) + O(t**(order+1))``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[PolyLike], order: int | None = None):
        cs = [_as_poly(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = cs[: order + 1] + [Poly()] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least its constant coefficient")
        self.coeffs: tuple[Poly, ...] = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([Poly([1])], order)

    @classmethod
    def t(cls, order: int) -> "TruncSeries":
        return cls([Poly(), Poly([1])], order)

    def __getitem__(self, j: int) -> Poly:
        return self.coeffs[j]

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"({c})*t^{j}" for j, c in enumerate(self.coeffs) if c]
        return f"TruncSeries({' + '.join(terms) or '0'} + O(t^{self.order + 1}))"

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1])

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries(self.coeffs[j] + other.coeffs[j] for j in range(n + 1))

    def __neg__(self):
        return TruncSeries(-c for c in self.coeffs)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def scale(self, c: PolyLike) -> "TruncSeries":
        """Multiply every coefficient by a scalar or a polynomial in ``z``."""
        c = _as_poly(c)
        return TruncSeries(a * c for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other: "TruncSeries") -> "TruncSeries":
        return series_quotient(self, other)

    def mul_t(self, k: int = 1) -> "TruncSeries":
        """Multiply by ``t**k``; the order grows by ``k`` with no loss."""
        return TruncSeries([Poly()] * k + list(self.coeffs))

    def div_t(self, k: int = 1) -> "TruncSeries":
        """Divide by ``t**k``.  The shift-by-t normalisation step: the first
        ``k`` coefficients must vanish and the order drops by ``k``."""
        if k > self.order:
            raise ValueError("not enough coefficients to divide by t")
        for j in range(k):
            if self.coeffs[j]:
                raise ZeroConstantTerm(f"coefficient of t^{j} is {self.coeffs[j]}, cannot divide by t^{k}")
        return TruncSeries(self.coeffs[k:])

    def scale_t(self, c: RationalLike) -> "TruncSeries":
        """Substitute ``t -> c t``."""
        c = as_rational(c)
        out, f = [], Fraction(1)
        for a in self.coeffs:
            out.append(a * f)
            f *= c
        return TruncSeries(out)

    def even_part(self) -> "TruncSeries":
        return TruncSeries(c if j % 2 == 0 else Poly() for j, c in enumerate(self.coeffs))

    def odd_part(self) -> "TruncSeries":
        return TruncSeries(c if j % 2 else Poly() for j, c in enumerate(self.coeffs))


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order)
    out = []
    for m in range(n + 1):
        acc = Poly()
        for j in range(m + 1):
            if a.coeffs[j] and b.coeffs[m - j]:
                acc = acc + a.coeffs[j] * b.coeffs[m - j]
        out.append(acc)
    return TruncSeries(out)


def series_reciprocal(a: TruncSeries) -> TruncSeries:
    a0 = a.coeffs[0]
    if a0.is_zero() or not a0.is_constant():
        raise ZeroConstantTerm(f"constant coefficient {a0} is not an invertible constant")
    inv0 = 1 / a0[0]
    out = [Poly([inv0])]
    for m in range(1, a.order + 1):
        acc = Poly()
        for k in range(1, m + 1):
            if a.coeffs[k] and out[m - k]:
                acc = acc + a.coeffs[k] * out[m - k]
        out.append(acc * (-inv0))
    return TruncSeries(out)


def series_quotient(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return series_mul(a, series_reciprocal(b))


SMALL_E, BIG_E = "small_e", "big_E"


def _exp_weight(ctx: QContext, kind: str, j: int) -> Fraction:
    if kind == SMALL_E:
        return Fraction(1)
    if kind == BIG_E:
        return ctx.power(j * (j - 1) // 2)
    raise ValueError(f"unknown exponential kind {kind!r}")


def q_exp_series(ctx: QContext, kind: str, u: PolyLike, N: int) -> TruncSeries:
    """``e_q(u t)`` (``small_e``) or ``E_q(u t)`` (``big_E``) through ``t**N``."""
    if N < 0:
        raise ValueError("N must be >= 0")
    u = _as_poly(u)
    out, upow = [], Poly([1])
    for j in range(N + 1):
        out.append(upow * (_exp_weight(ctx, kind, j) / ctx.q_factorial(j)))
        upow = upow * u
    return TruncSeries(out)


# name -> (exponential kind, parity, alternating sign)
_ELEMENTARY = {
    "sinh": (SMALL_E, 1, False),
    "cosh": (SMALL_E, 0, False),
    "Sinh": (BIG_E, 1, False),
    "Cosh": (BIG_E, 0, False),
    "sin": (SMALL_E, 1, True),
    "cos": (SMALL_E, 0, True),
    "Sin": (BIG_E, 1, True),
    "Cos": (BIG_E, 0, True),
}

HYPER_KINDS = tuple(_ELEMENTARY) + ("tan", "tanh", "t_coth", "t_cot", "Tanh", "t_Coth")


def _elementary(ctx: QContext, name: str, u: Poly, N: int) -> TruncSeries:
    exp_kind, par, alternating = _ELEMENTARY[name]
    out, upow = [], Poly([1])
    for j in range(N + 1):
        if j % 2 == par:
            c = _exp_weight(ctx, exp_kind, j) / ctx.q_factorial(j)
            if alternating and (j // 2) % 2:
                c = -c
            out.append(upow * c)
        else:
            out.append(Poly())
        upow = upow * u
    return TruncSeries(out)


def q_hyper_series(ctx: QContext, kind: str, u: PolyLike, N: int) -> TruncSeries:
    """q-trigonometric and q-hyperbolic series in ``u t`` through ``t**N``.

    ``tan``/``tanh`` are the quotients odd/even; ``t_coth``/``t_cot`` are
    ``t`` times the reciprocal quotients, which start with 1.  Capitalised
    names use the ``E_q`` weights.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    u = _as_poly(u)
    if kind in _ELEMENTARY:
        return _elementary(ctx, kind, u, N)
    if kind in ("tan", "tanh", "Tanh"):
        odd, even = {"tan": ("sin", "cos"), "tanh": ("sinh", "cosh"), "Tanh": ("Sinh", "Cosh")}[kind]
        return series_quotient(_elementary(ctx, odd, u, N), _elementary(ctx, even, u, N))
    if kind in ("t_coth", "t_cot", "t_Coth"):
        odd, even = {"t_coth": ("sinh", "cosh"), "t_cot": ("sin", "cos"), "t_Coth": ("Sinh", "Cosh")}[kind]
        num = _elementary(ctx, even, u, N)
        den = _elementary(ctx, odd, u, N + 1).div_t()
        return series_quotient(num, den)
    raise ValueError(f"unknown series kind {kind!r}")


def coefficient_table(s: TruncSeries) -> list[Poly]:
    return list(s.coeffs)


def from_numbers(values: Sequence[RationalLike]) -> TruncSeries:
    """Series with constant (z-free) coefficients."""
    return TruncSeries(Poly([as_rational(v)]) for v in values)
