"""Polynomials over Z_p and the finite fields GF(p^k) built from them.

A polynomial a_0 + a_1 X + ... + a_n X^n is a tuple ``(a_0, ..., a_n)`` of
integers in ``[0, p)``, low degree first.  Field elements are coefficient
tuples of fixed length k.
"""

from __future__ import annotations

import itertools
from functools import cached_property

from sympy import isprime

MAX_DEGREE = 4


def trim(a):
    """Drop trailing zero coefficients; the zero polynomial is ``()``."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def poly_mod(a, m, p):
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = list(trim(a))
    d = len(m) - 1
    while len(a) - 1 >= d:
        c = a[-1]
        shift = len(a) - 1 - d
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = list(trim(a))
    return tuple(a)


def monic_polys(p, degree):
    """All monic polynomials of the given degree, in lexicographic order.

    Order is by the integer a_0 + a_1 p + ... + a_{d-1} p^{d-1}.
    """
    for low in itertools.product(range(p), repeat=degree):
        yield tuple(reversed(low)) + (1,)


def is_irreducible(poly, p):
    """Exhaustive factor search: no monic factor of degree 1..deg//2 divides."""
    poly = trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if poly[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for f in monic_polys(p, d):
            if not poly_mod(poly, f, p):
                return False
    return True


def smallest_irreducible(p, k):
    for f in monic_polys(p, k):
        if is_irreducible(f, p):
            return f
    raise ValueError(f"no irreducible polynomial of degree {k} over Z_{p}")


def check_field_params(p, k, poly):
    """Return the (possibly defaulted) modulus polynomial or raise ValueError."""
    if not isinstance(p, int) or not isprime(p):
        raise ValueError(f"characteristic {p!r} is not prime")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"extension degree {k!r} must be a positive integer")
    if k > MAX_DEGREE:
        raise ValueError(f"extension degree {k} exceeds supported maximum {MAX_DEGREE}")
    if poly is None:
        return smallest_irreducible(p, k)
    poly = tuple(int(c) for c in poly)
    if any(not 0 <= c < p for c in poly):
        raise ValueError(f"coefficients of {poly} are not reduced mod {p}")
    if len(poly) != k + 1 or poly[-1] != 1:
        raise ValueError(f"modulus {poly} is not monic of degree {k}")
    if not is_irreducible(poly, p):
        raise ValueError(f"modulus {poly} is reducible over Z_{p}")
    return poly


class GaloisField:
    """Arithmetic in Z_p[X]/(poly), with log tables for fast multiplication.

    The tables are filled from :func:`poly_mul`/:func:`poly_mod`, which stay
    available as :meth:`mul_slow` for cross-checking.
    """

    def __init__(self, p, k, poly):
        self.p = p
        self.k = k
        self.poly = tuple(poly)
        self.order = p**k
        self.elements = tuple(
            tuple(reversed(c)) for c in itertools.product(range(p), repeat=k)
        )
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    def pad(self, a):
        a = trim(a)
        return a + (0,) * (self.k - len(a))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul_slow(self, a, b):
        return self.pad(poly_mod(poly_mul(trim(a), trim(b), self.p), self.poly, self.p))

    @cached_property
    def _tables(self):
        q1 = self.order - 1
        for g in self.elements[1:]:
            exp = [self.one]
            x = g
            while x != self.one:
                exp.append(x)
                x = self.mul_slow(x, g)
            if len(exp) == q1:
                return exp, {e: i for i, e in enumerate(exp)}
        raise AssertionError(f"no primitive element modulo {self.poly}")

    def mul(self, a, b):
        if a == self.zero or b == self.zero:
            return self.zero
        exp, log = self._tables
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def inverse(self, a):
        if a == self.zero:
            raise ZeroDivisionError("zero has no inverse")
        exp, log = self._tables
        return exp[-log[a] % (self.order - 1)]
