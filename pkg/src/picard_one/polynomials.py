"""Exact dense univariate polynomial arithmetic.

Polynomials are lists/tuples of coefficients in ascending degree order
over int or Fraction; [] is the zero polynomial and trailing zeros are
stripped by the constructors here.  Everything is exact: no floating
point enters the pipeline anywhere.

Poly1 is a tiny operator-overloaded wrapper used where generic ring
evaluation is convenient (substituting polynomial coordinates into
forms, parametrization identities); the function-style API below is
what the pipeline itself uses.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def trim(c: Sequence) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def add(a: Sequence, b: Sequence) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] += bi
    return trim(out)


def neg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def sub(a: Sequence, b: Sequence) -> tuple:
    return add(a, neg(b))

def mul(a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim(out)


def scale(a: Sequence, c) -> tuple:
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def divmod_exact(a: Sequence, b: Sequence) -> tuple[tuple, tuple]:
    """Quotient and remainder over the rationals (exact Fractions)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    db, lead = len(b) - 1, Fraction(b[-1])
    while len(r) >= len(b) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        c = r[-1] / lead
        shift = len(r) - 1 - db
        q[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] -= c * bi
        r.pop()
    return trim(q), trim(r)


def div_exact_int(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Exact division of integer polynomials; raises if not exact over Z."""
    q, r = divmod_exact(a, b)
    if r:
        raise ValueError("polynomial division is not exact")
    out = []
    for c in q:
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError("quotient is not integral")
        out.append(int(c))
    return trim(out)


def divides(b: Sequence[int], a: Sequence[int]) -> bool:
    _, r = divmod_exact(a, b)
    return not r


def evaluate(a: Sequence, x):
    r = 0
    for c in reversed(tuple(a)):
        r = r * x + c
    return r


def derivative(a: Sequence) -> tuple:
    return trim([i * a[i] for i in range(1, len(a))])


def degree(a: Sequence) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(trim(a)) - 1


def content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = gcd(g, int(c))
    return g


def pow_int(a: Sequence, e: int) -> tuple:
    r: tuple = (1,)
    b = trim(a)
    while e:
        if e & 1:
            r = mul(r, b)
        b = mul(b, b)
        e >>= 1
    return r


def from_roots(roots: Sequence) -> tuple:
    r: tuple = (1,)
    for root in roots:
        r = mul(r, (-root, 1))
    return r


class Poly1:
    """Polynomial in one variable over an exact ring, operator style.

    Supports +, -, *, ** with ints/Fractions mixed in; used for
    substitution identities where generic evaluation reads better than
    the list API.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):  # ascending
        self.coeffs = trim(coeffs)

    @classmethod
    def x(cls) -> "Poly1":
        return cls((0, 1))

    def _coerce(self, other) -> "Poly1":
        if isinstance(other, Poly1):
            return other
        return Poly1((other,))

    def __add__(self, other):
        return Poly1(add(self.coeffs, self._coerce(other).coeffs))

    __radd__ = __add__

    def __neg__(self):
        return Poly1(neg(self.coeffs))

    def __sub__(self, other):
        return Poly1(sub(self.coeffs, self._coerce(other).coeffs))

    def __rsub__(self, other):
        return Poly1(sub(self._coerce(other).coeffs, self.coeffs))

    def __mul__(self, other):
        return Poly1(mul(self.coeffs, self._coerce(other).coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return Poly1(pow_int(self.coeffs, e))

    def __eq__(self, other):
        return self.coeffs == self._coerce(other).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return "Poly1(%r)" % (list(self.coeffs),)
