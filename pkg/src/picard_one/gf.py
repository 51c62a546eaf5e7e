"""Arithmetic in GF(p^n) for small p and moderate extension degree.

Field elements are plain ints in [0, q) with q = p^n.  The base-p
digits of an element are the coefficients of its polynomial
representation in the modulus basis: digit i is the coefficient of x^i.
Zero is 0, one is 1, and the prime subfield is the ints 0..p-1.  All
operations live on a FieldCtx, which owns the modulus polynomial and,
for fields within the table budget, log/antilog tables giving O(1)
multiplication and inversion.

The modulus is the lexicographically smallest monic irreducible of its
degree (coefficients compared from x^{n-1} down to the constant term);
a nonzero seed selects the next ones in the same order.  Every
serialized artifact records the modulus so runs are reproducible.

Polynomials over GF(p) used internally are tuples of ints in [0, p),
ascending degree, trailing zeros stripped; () is the zero polynomial.
"""

from __future__ import annotations

import random
from typing import Sequence

#: q at or below this bound gets log/antilog tables (covers every field
#: this artifact needs; p=3, n=12 is 531441).
TABLE_BUDGET = 2**20

#: Sentinel returned by count_quartic_roots for the zero polynomial,
#: meaning "every element of the field is a root".  Kept distinct from
#: any true root count so callers must handle it explicitly.
ALL_FIELD = -1

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, valid for all m < 3.3 * 10^24."""
    if m < 2:
        return False
    for w in _MR_WITNESSES:
        if m % w == 0:
            return m == w
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# dense univariate polynomials over GF(p)
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] = (out[i] + bi) % p
    return _trim(out)


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] = (out[i] - bi) % p
    return _trim(out)


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    """a mod m; m need not be monic."""
    r = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(r) - 1 >= dm and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dm:
            break
        c = r[-1] * inv_lead % p
        shift = len(r) - 1 - dm
        for i, mi in enumerate(m):
            r[shift + i] = (r[shift + i] - c * mi) % p
        r.pop()
    return _trim(r)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    a, b = tuple(a), tuple(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: Sequence[int], e: int, m: Sequence[int], p: int) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    b = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, b, p), m, p)
        b = _pmod(_pmul(b, b, p), m, p)
        e >>= 1
    return result


def _proper_divisors(n: int) -> list[int]:
    return [k for k in range(1, n) if n % k == 0]


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    """Check irreducibility of monic m over GF(p).

    The test is: x^{p^n} == x mod m, and gcd(x^{p^k} - x, m) = 1 for
    every proper divisor k of n.
    """
    n = len(m) - 1
    if n == 1:
        return True
    x = (0, 1)
    xq = _ppowmod(x, p**n, m, p)
    if xq != x:
        return False
    for k in _proper_divisors(n):
        g = _pgcd(_psub(_ppowmod(x, p**k, m, p), x, p), m, p)
        if len(g) > 1:
            return False
    return True


def _factor_small(n: int) -> list[int]:
    """Distinct prime factors by trial division (inputs are < 2^40ish)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class FieldError(ValueError):
    """Invalid field construction or operation."""


class FieldCtx:
    """Immutable context for GF(p^n); all element ops take/return ints."""

    __slots__ = ("p", "n", "q", "modulus", "seed", "generator", "exp", "log")

    def __init__(self, p: int, n: int, modulus: tuple[int, ...], seed: int,
                 table_budget: int = TABLE_BUDGET):
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = modulus
        self.seed = seed
        self.generator: int | None = None
        self.exp: list[int] | None = None
        self.log: list[int] | None = None
        if self.q <= table_budget:
            self._build_tables()

    # -- element <-> coefficient vector --------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Length-n coefficient vector of a in the modulus basis."""
        p = self.p
        out = []
        for _ in range(self.n):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        a = 0
        for c in reversed(cs):
            a = a * self.p + c % self.p
        return a

    def elements(self) -> range:
        return range(self.q)

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.q)

    # -- arithmetic -----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        out, shift = 0, 1
        for _ in range(self.n):
            out += (a % p + b % p) % p * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        out, shift = 0, 1
        for _ in range(self.n):
            out += (-a % p) * shift
            a //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.exp is not None:
            s = self.log[a] + self.log[b]
            if s >= self.q - 1:
                s -= self.q - 1
            return self.exp[s]
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _pmul(self.coeffs(a), self.coeffs(b), self.p)
        return self.from_coeffs(_pmod(prod, self.modulus, self.p) + (0,) * self.n)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d^%d)" % (self.p, self.n))
        if self.exp is not None:
            return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def frobenius(self, a: int) -> int:
        """The p-power map a -> a^p; fixes GF(p), n-fold iterate is identity."""
        return self.pow(a, self.p)

    # -- tables ----------------------------------------------------------

    def _build_tables(self) -> None:
        g = self._find_generator()
        self.generator = g
        exp = [0] * (self.q - 1)
        log = [-1] * self.q
        v = 1
        for k in range(self.q - 1):
            exp[k] = v
            log[v] = k
            v = self._mul_poly(v, g)
        if v != 1:  # pragma: no cover - would mean g was not primitive
            raise FieldError("generator order mismatch")
        self.exp, self.log = exp, log

    def _find_generator(self) -> int:
        order_factors = _factor_small(self.q - 1)
        cofactors = [(self.q - 1) // ell for ell in order_factors]
        # x (index p) first, then increasing indices; deterministic.
        candidates = [self.p] if self.n > 1 else []
        candidates += [a for a in range(2, self.q) if a != self.p]
        for a in candidates:
            if all(self._pow_poly(a, c) != 1 for c in cofactors):
                return a
        raise FieldError("no generator found")  # pragma: no cover

    def _pow_poly(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_poly(r, a)
            a = self._mul_poly(a, a)
            e >>= 1
        return r

    # ---------------------------------------------------------------------

    def __repr__(self) -> str:
        return "FieldCtx(p=%d, n=%d, modulus=%r)" % (self.p, self.n, list(self.modulus))


def make_field(p: int, n: int, seed: int = 0, table_budget: int = TABLE_BUDGET) -> FieldCtx:
    """Build GF(p^n) with the seed-th smallest monic irreducible modulus.

    Deterministic for fixed (p, n, seed).  Fails on composite p, on
    overflow of p^n past 2^63, and on exhaustion of the irreducible
    search (which cannot happen for the small fields this artifact
    uses; it would indicate an internal bug).
    """
    if not is_prime(p):
        raise FieldError("p = %d is not prime" % p)
    if n < 1:
        raise FieldError("extension degree must be >= 1")
    if p**n > 2**63:
        raise FieldError("p^n = %d^%d does not fit the element encoding" % (p, n))
    remaining = seed
    for m_enc in range(p**n):
        digits = []
        e = m_enc
        for _ in range(n):
            digits.append(e % p)
            e //= p
        modulus = tuple(digits) + (1,)
        if _is_irreducible(modulus, p):
            if remaining == 0:
                return FieldCtx(p, n, modulus, seed, table_budget)
            remaining -= 1
    raise FieldError("irreducible search exhausted for p=%d, n=%d, seed=%d" % (p, n, seed))


# ---------------------------------------------------------------------------
# root counting for the fiber specialization
# ---------------------------------------------------------------------------

def count_quartic_roots(coeffs_desc: Sequence[int], ctx: FieldCtx) -> int:
    """Number of distinct roots in GF(q) of c4*w^4 + ... + c0.

    Coefficients are given in descending degree order (c4, c3, c2, c1,
    c0).  Computed as deg gcd(f, w^q - w), with w^q mod f obtained by
    binary exponentiation.  Returns ALL_FIELD for the zero polynomial,
    because the caller must then add q points rather than 4.
    Multiplicity is irrelevant here: the fiber count wants distinct
    w-values.
    """
    f = list(coeffs_desc[::-1])
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return ALL_FIELD
    if len(f) == 1:
        return 0
    inv_lead = ctx.inv(f[-1])
    f = [ctx.mul(c, inv_lead) for c in f]
    s = _powmod_x(ctx.q, f, ctx)
    # gcd(f, s - w)
    t = list(s) + [0] * (2 - len(s))
    t[1] = ctx.sub(t[1], 1)
    g = _gcd_elem(f, t, ctx)
    return len(g) - 1


def _powmod_x(e: int, f: Sequence[int], ctx: FieldCtx) -> list[int]:
    """w^e mod f over GF(q), f monic of degree >= 1; binary exponentiation."""
    r = [1]
    b = _mod_elem([0, 1], f, ctx)
    while e:
        if e & 1:
            r = _mod_elem(_mul_elem(r, b, ctx), f, ctx)
        b = _mod_elem(_mul_elem(b, b, ctx), f, ctx)
        e >>= 1
    return r


def _trim_elem(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _mul_elem(a: Sequence[int], b: Sequence[int], ctx: FieldCtx) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
    return _trim_elem(out)


def _mod_elem(a: Sequence[int], m: Sequence[int], ctx: FieldCtx) -> list[int]:
    """a mod m with m monic, coefficients in GF(q)."""
    r = list(a)
    dm = len(m) - 1
    while True:
        r = _trim_elem(r)
        if len(r) - 1 < dm:
            return r
        c = r[-1]
        shift = len(r) - 1 - dm
        for i, mi in enumerate(m):
            if mi:
                r[shift + i] = ctx.sub(r[shift + i], ctx.mul(c, mi))
        r.pop()


def _gcd_elem(a: Sequence[int], b: Sequence[int], ctx: FieldCtx) -> list[int]:
    a, b = _trim_elem(list(a)), _trim_elem(list(b))
    while b:
        inv = ctx.inv(b[-1])
        b = [ctx.mul(c, inv) for c in b]
        a, b = b, _mod_elem(a, b, ctx)
    return a
