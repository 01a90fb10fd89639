"""Exact q-combinatorial primitives.

All values are :class:`fractions.Fraction`; nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an exact value (int, Fraction or ``"p/q"`` string) to a Fraction.

    Floats are refused on purpose: they would silently import rounding error.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


class QContext:
    """A fixed base ``q`` in (0, 1] that memoises every q-quantity it
    computes.

    The tables are append-only and only ever hold values computed from
    ``q`` itself, so a cached read is always equal to a fresh computation.
    """

    __slots__ = ("_q", "_ints", "_facts", "_powers", "_binoms")

    def __init__(self, q: RationalLike):
        q = as_rational(q)
        if not (0 < q <= 1):
            raise ValueError(f"q must satisfy 0 < q <= 1, got {q}")
        self._q = q
        self._ints = [Fraction(0)]
        self._facts = [Fraction(1)]
        self._powers = [Fraction(1)]
        self._binoms: dict[tuple[int, int], Fraction] = {}

    @property
    def q(self) -> Fraction:
        return self._q

    def __repr__(self):
        return f"QContext(q={self._q})"

    def __eq__(self, other):
        return isinstance(other, QContext) and other._q == self._q

    def __hash__(self):
        return hash(("QContext", self._q))

    def power(self, k: int) -> Fraction:
        """``q**k`` for any integer ``k`` (negative allowed)."""
        if k < 0:
            return 1 / self.power(-k)
        powers = self._powers
        while len(powers) <= k:
            powers.append(powers[-1] * self._q)
        return powers[k]

    def q_int(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("q_int needs n >= 0")
        ints = self._ints
        while len(ints) <= n:
            m = len(ints)
            ints.append(ints[-1] + self.power(m - 1))
        return ints[n]

    def q_factorial(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("q_factorial needs n >= 0")
        facts = self._facts
        while len(facts) <= n:
            m = len(facts)
            facts.append(facts[-1] * self.q_int(m))
        return facts[n]

    def q_binomial(self, n: int, k: int) -> Fraction:
        if n < 0 or k < 0 or k > n:
            return Fraction(0)
        key = (n, k)
        value = self._binoms.get(key)
        if value is None:
            value = self.q_factorial(n) / (self.q_factorial(k) * self.q_factorial(n - k))
            self._binoms[key] = value
        return value

    def q_int_inverse_base(self, n: int) -> Fraction:
        """``[n]_{1/q} = q**(1-n) * [n]_q``."""
        if n < 0:
            raise ValueError("q_int_inverse_base needs n >= 0")
        if n == 0:
            return Fraction(0)
        return self.power(1 - n) * self.q_int(n)


# Functional spellings, handy when a context is passed around explicitly.

def q_int(ctx: QContext, n: int) -> Fraction:
    return ctx.q_int(n)


def q_factorial(ctx: QContext, n: int) -> Fraction:
    return ctx.q_factorial(n)


def q_binomial(ctx: QContext, n: int, k: int) -> Fraction:
    return ctx.q_binomial(n, k)


def q_int_inverse_base(ctx: QContext, n: int) -> Fraction:
    return ctx.q_int_inverse_base(n)


def format_rational(x: Fraction) -> str:
    """Canonical ``"p/q"`` (or ``"p"`` for integers) string."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
