"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Values are stored as rational coordinate vectors in the power basis
1, zeta, ..., zeta^(phi(N)-1), kept reduced modulo the N-th cyclotomic
polynomial.  The conductor is fixed by the caller (the group exponent in
character-table work) and never minimized; equality is coordinate equality
at equal conductors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from sympy import Poly, Symbol, cyclotomic_poly, totient

_x = Symbol("x")


@lru_cache(maxsize=None)
def _power_table(N):
    """Coordinates of zeta_N^k for k = 0..N-1 in the power basis (int tuples)."""
    phi = int(totient(N))
    poly = Poly(cyclotomic_poly(N, _x), _x)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]  # constant term first
    assert len(coeffs) == phi + 1 and coeffs[-1] == 1
    # zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1})
    top = [-c for c in coeffs[:phi]]
    table = []
    for k in range(phi):
        table.append(tuple(1 if i == k else 0 for i in range(phi)))
    for _ in range(phi, N):
        prev = table[-1]
        # multiply by zeta: shift, then fold the overflow through `top`
        nxt = [0] * phi
        for i in range(phi - 1):
            nxt[i + 1] += prev[i]
        ov = prev[phi - 1]
        if ov:
            for i in range(phi):
                nxt[i] += ov * top[i]
        table.append(tuple(nxt))
    return tuple(table)


def phi_of(N):
    return int(totient(N))


class Cyclotomic:
    """An element of Q(zeta_N) in reduced power-basis coordinates."""

    __slots__ = ("conductor", "coords")

    def __init__(self, conductor, coords):
        phi = phi_of(conductor)
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != phi:
            raise ValueError("expected %d coordinates for conductor %d" % (phi, conductor))
        self.conductor = conductor
        self.coords = coords

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, N):
        return cls(N, [0] * phi_of(N))

    @classmethod
    def from_rational(cls, r, N):
        coords = [Fraction(r)] + [Fraction(0)] * (phi_of(N) - 1)
        return cls(N, coords)

    @classmethod
    def root_of_unity(cls, N, k=1):
        """zeta_N^k."""
        return cls(N, _power_table(N)[k % N])

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("value is not rational: %r" % (self,))
        return self.coords[0]

    def is_integer(self):
        return self.is_rational() and self.coords[0].denominator == 1

    def integer_value(self):
        v = self.rational_value()
        if v.denominator != 1:
            raise ValueError("value is not an integer: %s" % v)
        return v.numerator

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                raise ValueError("conductor mismatch: %d vs %d" % (self.conductor, other.conductor))
            return other
        return Cyclotomic.from_rational(other, self.conductor)

    def __add__(self, other):
        other = self._check(other)
        return Cyclotomic(self.conductor, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Cyclotomic):
            return Cyclotomic(self.conductor, [a * Fraction(other) for a in self.coords])
        other = self._check(other)
        N = self.conductor
        table = _power_table(N)
        phi = len(self.coords)
        # convolve, reducing exponents >= phi through the table
        acc = [Fraction(0)] * phi
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b == 0:
                    continue
                e = i + j
                c = a * b
                if e < phi:
                    acc[e] += c
                else:
                    row = table[e % N]
                    for t, r in enumerate(row):
                        if r:
                            acc[t] += c * r
        return Cyclotomic(N, acc)

    __rmul__ = __mul__

    def galois(self, k):
        """Apply the Galois automorphism zeta -> zeta^k (gcd(k, N) = 1)."""
        N = self.conductor
        if gcd(k, N) != 1:
            raise ValueError("k = %d is not prime to the conductor %d" % (k, N))
        table = _power_table(N)
        phi = len(self.coords)
        acc = [Fraction(0)] * phi
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            row = table[(i * k) % N]
            for t, r in enumerate(row):
                if r:
                    acc[t] += a * r
        return Cyclotomic(N, acc)

    def conj(self):
        """Complex conjugation zeta -> zeta^-1."""
        if self.conductor == 1:
            return self
        return self.galois(self.conductor - 1)

    def lift(self, L):
        """Re-express in Q(zeta_L) for a multiple L of the conductor."""
        N = self.conductor
        if L == N:
            return self
        if L % N:
            raise ValueError("cannot lift conductor %d into %d" % (N, L))
        step = L // N
        table = _power_table(L)
        phi = phi_of(L)
        acc = [Fraction(0)] * phi
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            row = table[(i * step) % L]
            for t, r in enumerate(row):
                if r:
                    acc[t] += a * r
        return Cyclotomic(L, acc)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return (
            isinstance(other, Cyclotomic)
            and self.conductor == other.conductor
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.conductor, self.coords))

    def __repr__(self):
        if self.is_rational():
            return "Cyclotomic(%s)" % self.coords[0]
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                terms.append("%s*z%d^%d" % (c, self.conductor, i))
        return "Cyclotomic(%s)" % " + ".join(terms)
