"""Dense univariate polynomials in ``z`` with exact rational coefficients,
plus the Jackson difference operators acting on them."""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

from .qcore import QContext, RationalLike, as_rational, format_rational

EVEN, ODD, NEITHER, ZERO = "even", "odd", "neither", "zero"


class Poly:
    """Immutable polynomial ``sum(coeffs[m] * z**m)``.

    Trailing zeros are trimmed, so the zero polynomial has ``coeffs == ()``
    and ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, m: int, c: RationalLike = 1) -> "Poly":
        return cls([0] * m + [c])

    @classmethod
    def constant(cls, c: RationalLike) -> "Poly":
        return cls([c])

    @classmethod
    def z(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, m: int) -> Fraction:
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return render(self)

    # ring arithmetic

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly(c * other for c in self.coeffs)
        other = _lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_rational(c)
        return Poly(a / c for a in self.coeffs)

    def __pow__(self, k: int):
        result = Poly([1])
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x):
        """Horner evaluation at a rational (or anything supporting + and *)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_power(self, k: int) -> "Poly":
        """Multiply by ``z**k``."""
        if not self.coeffs:
            return self
        return Poly([0] * k + list(self.coeffs))


def _lift(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Poly([x])
    return NotImplemented


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_sub(a: Poly, b: Poly) -> Poly:
    return a - b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_scale(a: Poly, c: RationalLike) -> Poly:
    return a * as_rational(c)


def dq(ctx: QContext, p: Poly) -> Poly:
    """Jackson derivative: ``c z**m -> c [m]_q z**(m-1)``."""
    return Poly(c * ctx.q_int(m) for m, c in enumerate(p.coeffs) if m > 0)


def dq_inv(ctx: QContext, p: Poly) -> Poly:
    """Derivative in base ``1/q``: ``c z**m -> c [m]_{1/q} z**(m-1)``."""
    return Poly(c * ctx.q_int_inverse_base(m) for m, c in enumerate(p.coeffs) if m > 0)


def dq_power(ctx: QContext, p: Poly, k: int, inverse_base: bool = False) -> Poly:
    op = dq_inv if inverse_base else dq
    for _ in range(k):
        p = op(ctx, p)
    return p


def scale_arg(p: Poly, c: RationalLike) -> Poly:
    """``p(c z)``."""
    c = as_rational(c)
    out, f = [], Fraction(1)
    for a in p.coeffs:
        out.append(a * f)
        f *= c
    return Poly(out)


def parity(p: Poly) -> str:
    if p.is_zero():
        return ZERO
    odd = any(c for m, c in enumerate(p.coeffs) if m % 2)
    even = any(c for m, c in enumerate(p.coeffs) if m % 2 == 0)
    if odd and even:
        return NEITHER
    return ODD if odd else EVEN


def q_integral(ctx: QContext, p: Poly) -> Fraction:
    """Jackson integral over [0, 1], by the monomial rule ``1/[m+1]_q``."""
    return sum((c / ctx.q_int(m + 1) for m, c in enumerate(p.coeffs)), Fraction(0))


def render(p: Poly, var: str = "z") -> str:
    """Canonical text form, highest power first, e.g. ``"1/8 z^3 + z"``."""
    if p.is_zero():
        return "0"
    parts = []
    for m in range(p.degree, -1, -1):
        c = p.coeffs[m]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if m == 0:
            body = format_rational(mag)
        else:
            mono = var if m == 1 else f"{var}^{m}"
            body = mono if mag == 1 else f"{format_rational(mag)} {mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def render_latex(p: Poly, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for m in range(p.degree, -1, -1):
        c = p.coeffs[m]
        if not c:
            continue
        mag = abs(c)
        if mag.denominator == 1:
            coef = str(mag.numerator)
        else:
            coef = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        if m == 0:
            body = coef
        else:
            mono = var if m == 1 else f"{var}^{{{m}}}"
            body = mono if mag == 1 else f"{coef}{mono}"
        terms.append(("-" if c < 0 else "+", body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def sparse_terms(p: Poly) -> list[tuple[int, Fraction]]:
    return [(m, c) for m, c in enumerate(p.coeffs) if c]


def from_sparse(pairs: Sequence[tuple[int, RationalLike]]) -> Poly:
    if not pairs:
        return Poly()
    top = max(m for m, _ in pairs)
    cs = [Fraction(0)] * (top + 1)
    for m, c in pairs:
        cs[m] += as_rational(c)
    return Poly(cs)
