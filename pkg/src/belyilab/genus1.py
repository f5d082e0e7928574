"""Genus-1 Galois cover machinery: inertia triples, cyclic Kummer covers,
CM-stable torsion subgroups with their semidirect groups, and the degree
of the j-invariant attached to an odd torsion level.

The Hurwitz identity 1/a + 1/b + 1/c = 1 pins the inertia orders of a
genus-1 Galois cover of the line to three triples.  The cyclic models are
the covers y^d = t^a (t-1)^b; the nonabelian ones are semidirect products
J x| Z/d where J is a subgroup of the n-torsion (Z/n)^2 stable under the
multiplication-by-zeta_d matrix.  j_invariant_degree evaluates
j = 256 (z^2 - z + 1)^3 / (z^2 (z - 1)^2) at a primitive t-th root of
unity and counts its Galois conjugates, exactly: a mod-q prefilter
discards most candidate stabilizer elements and every survivor is
confirmed by integer cyclotomic cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from sympy import Poly, Symbol, cyclotomic_poly, isprime

from .cover import BelyiCover
from .cyclotomic import Cyclotomic, phi_of
from .errors import InternalError, PreconditionError
from .groups import TableGroup
from .permgroup import Permutation

ADMISSIBLE_KUMMER = ((1, 1, 3), (2, 2, 3), (1, 2, 6), (5, 4, 6), (1, 1, 4), (3, 3, 4))

# (c0, c1) with zeta_d satisfying x^2 + c1 x + c0
_MINIMAL_POLYNOMIALS = {
    3: (1, 1),  # x^2 + x + 1
    4: (1, 0),  # x^2 + 1
    6: (1, -1),  # x^2 - x + 1
}


def inertia_triples():
    """All (a, b, c) with a >= b >= c >= 2 and 1/a + 1/b + 1/c = 1."""
    out = []
    for c in range(2, 4):  # 3/c >= 1 forces c <= 3
        for b in range(c, 13):
            for a in range(b, 13):
                if Fraction(1, a) + Fraction(1, b) + Fraction(1, c) == 1:
                    out.append((a, b, c))
    out.sort(reverse=True)
    if out != [(6, 3, 2), (4, 4, 2), (3, 3, 3)]:
        raise InternalError("inertia triple search found an unexpected set")
    return out


def kummer_cover(a, b, d) -> BelyiCover:
    """The cyclic cover y^d = t^a (t-1)^b as a monodromy pair on Z/d."""
    if d not in (3, 4, 6):
        raise PreconditionError("d must be one of 3, 4, 6")
    if gcd(gcd(a, b), d) > 1:
        raise PreconditionError("gcd(a, b, d) > 1: the cover is reducible")
    x = Permutation([(i + a) % d + 1 for i in range(d)])
    y = Permutation([(i + b) % d + 1 for i in range(d)])
    return BelyiCover(x, y)


def inertia_orders(a, b, d):
    return (d // gcd(a, d), d // gcd(b, d), d // gcd(a + b, d))


def cm_matrix(d, n):
    """Companion matrix of the minimal polynomial of zeta_d, mod n."""
    if d not in _MINIMAL_POLYNOMIALS:
        raise PreconditionError("d must be one of 3, 4, 6")
    c0, c1 = _MINIMAL_POLYNOMIALS[d]
    # companion of x^2 + c1 x + c0
    return ((0, (-c0) % n), (1, (-c1) % n))


class CmModule:
    """(Z/n)^2 with multiplication by zeta_d, and its stable subgroups."""

    def __init__(self, d, n):
        if n < 1:
            raise PreconditionError("level must be positive")
        self.d = d
        self.n = n
        self.matrix = cm_matrix(d, n)
        c0, c1 = _MINIMAL_POLYNOMIALS[d]
        for v in self._all_vectors():
            av = self._apply(v)
            aav = self._apply(av)
            w = tuple((aav[i] + c1 * av[i] + c0 * v[i]) % n for i in range(2))
            if w != (0, 0):
                raise InternalError("companion matrix violates its minimal polynomial")
        self.stable_subgroups = self._stable_subgroups()

    def _all_vectors(self):
        return [(i, j) for i in range(self.n) for j in range(self.n)]

    def _apply(self, v):
        A = self.matrix
        return (
            (A[0][0] * v[0] + A[0][1] * v[1]) % self.n,
            (A[1][0] * v[0] + A[1][1] * v[1]) % self.n,
        )

    def _span(self, gens):
        seen = {(0, 0)}
        frontier = [(0, 0)]
        while frontier:
            new = []
            for v in frontier:
                for g in gens:
                    w = ((v[0] + g[0]) % self.n, (v[1] + g[1]) % self.n)
                    if w not in seen:
                        seen.add(w)
                        new.append(w)
            frontier = new
        return frozenset(seen)

    def _stable_subgroups(self):
        vectors = self._all_vectors()
        subgroups = {self._span([])}
        for v in vectors:
            for w in vectors:
                subgroups.add(self._span([v, w]))
        stable = []
        for S in subgroups:
            if all(self._apply(v) in S for v in S):
                stable.append(sorted(S))
        stable.sort(key=lambda S: (len(S), S))
        return stable


def cm_stable_subgroups(d, n):
    """All subgroups of (Z/n)^2 stable under the zeta_d matrix."""
    return CmModule(d, n).stable_subgroups


def build_genus1_group(d, J, n) -> TableGroup:
    """The semidirect product J x| Z/d with Z/d acting by the zeta_d
    matrix, as a multiplication table."""
    cm = CmModule(d, n)
    J = [tuple(v[i] % n for i in range(2)) for v in J]
    Jset = set(J)
    if len(J) != len(Jset) or (0, 0) not in Jset:
        raise PreconditionError("J must be a subgroup given without repeats")
    for v in J:
        if cm._apply(v) not in Jset:
            raise PreconditionError("J is not stable under the CM matrix")
        for w in J:
            if ((v[0] + w[0]) % n, (v[1] + w[1]) % n) not in Jset:
                raise PreconditionError("J is not closed under addition")

    def act(t, v):
        for _ in range(t):
            v = cm._apply(v)
        return v

    elements = [(v, t) for t in range(d) for v in sorted(Jset)]
    elements.remove(((0, 0), 0))
    elements.insert(0, ((0, 0), 0))
    pos = {e: i for i, e in enumerate(elements)}
    table = [[0] * len(elements) for _ in elements]
    for (v1, t1) in elements:
        for (v2, t2) in elements:
            w = act(t1, v2)
            prod = (((v1[0] + w[0]) % n, (v1[1] + w[1]) % n), (t1 + t2) % d)
            table[pos[(v1, t1)]][pos[(v2, t2)]] = pos[prod]
    return TableGroup(table, names=elements)


def _cyclotomic_power(x, k):
    out = Cyclotomic.from_rational(1, x.conductor)
    for _ in range(k):
        out = out * x
    return out


def _j_parts(z):
    """(numerator, denominator) of j/256 at z: ((z^2-z+1)^3, z^2 (z-1)^2)."""
    one = Cyclotomic.from_rational(1, z.conductor)
    num = _cyclotomic_power(z * z - z + one, 3)
    den = (z * z) * _cyclotomic_power(z - one, 2)
    return num, den


def j_invariant_degree(t) -> int:
    """Number of Galois conjugates of j = 256 (z^2-z+1)^3 / (z^2 (z-1)^2)
    for z a primitive t-th root of unity, t odd."""
    if t <= 1 or t % 2 == 0:
        raise PreconditionError("t must be odd and greater than 1")
    units = [a for a in range(1, t) if gcd(a, t) == 1]
    phi = len(units)
    if phi != phi_of(t):
        raise InternalError("unit count disagrees with Euler phi")

    # mod-q prefilter: map zeta to an element of exact order t in F_q
    k = 2
    while True:
        q = k * t + 1
        k += 1
        if not isprime(q):
            continue
        r = None
        for c in range(2, q):
            cand = pow(c, (q - 1) // t, q)
            if cand != 1 and all(
                pow(cand, t // p, q) != 1 for p in _prime_factors(t)
            ):
                r = cand
                break
        if r is not None:
            break
    powers = {a: pow(r, a, q) for a in range(t)}

    def jnum_mod(a):
        z = powers[a % t]
        num = pow((z * z - z + 1) % q, 3, q)
        den = (z * z) % q * pow(z - 1, 2, q) % q
        return num, den

    num1, den1 = jnum_mod(1)
    survivors = []
    for a in units:
        num_a, den_a = jnum_mod(a)
        if (num_a * den1 - num1 * den_a) % q == 0:
            survivors.append(a)

    # exact confirmation of every surviving stabilizer candidate: the
    # cross-multiplied difference, computed with integer coefficients in
    # Z[x]/(x^t - 1), must be divisible by the t-th cyclotomic polynomial
    num1_p, den1_p = _j_parts_poly(1, t)
    stab = []
    for a in survivors:
        num_a, den_a = _j_parts_poly(a, t)
        diff = [
            u - v
            for u, v in zip(_poly_mul(num_a, den1_p, t), _poly_mul(num1_p, den_a, t))
        ]
        if _cyclotomic_divides(diff, t):
            stab.append(a)
    if 1 not in stab:
        raise InternalError("the identity is missing from the stabilizer")
    if phi % len(stab):
        raise InternalError("stabilizer size does not divide phi(t)")
    return phi // len(stab)


def _poly_mul(a, b, t):
    """Product of integer coefficient lists in Z[x]/(x^t - 1)."""
    out = [0] * t
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[(i + j) % t] += ai * bj
    return out


def _j_parts_poly(a, t):
    """(numerator, denominator) of j/256 at x^a in Z[x]/(x^t - 1)."""
    base = [0] * t
    base[(2 * a) % t] += 1
    base[a % t] -= 1
    base[0] += 1
    num = _poly_mul(_poly_mul(base, base, t), base, t)
    lin = [0] * t
    lin[a % t] += 1
    lin[0] -= 1
    sq = [0] * t
    sq[(2 * a) % t] = 1
    den = _poly_mul(sq, _poly_mul(lin, lin, t), t)
    return num, den


def _cyclotomic_divides(coeffs, t):
    """Whether the t-th cyclotomic polynomial divides the given integer
    polynomial (equality test in Z[zeta_t])."""
    x = Symbol("x")
    phi = Poly(cyclotomic_poly(t, x), x).all_coeffs()[::-1]  # ascending
    rem = list(coeffs)
    deg_phi = len(phi) - 1
    # synthetic division by a monic integer polynomial
    for i in range(len(rem) - 1, deg_phi - 1, -1):
        c = rem[i]
        if c:
            for j in range(deg_phi + 1):
                rem[i - deg_phi + j] -= c * phi[j]
    return all(v == 0 for v in rem)


def _prime_factors(t):
    out = []
    n = t
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out
