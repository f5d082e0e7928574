"""Exact character tables of finite groups via Dixon's method.

Class-sum matrices are diagonalized over a prime field F_p with
p = 1 (mod exponent) and p large enough to recover degrees and eigenvalue
multiplicities as honest integers; values are then lifted to exact
Cyclotomic numbers at the group exponent's conductor through a fixed
primitive root of unity in F_p.  Every table is validated against row
orthogonality and the degree sum before it is returned.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm

from sympy import factorint, isprime

from .cyclotomic import Cyclotomic
from .errors import InternalError
from .permgroup import PermGroup


class TableError(InternalError):
    """Internal inconsistency in character data (signals a bug upstream)."""


_SCALE_LIMIT = 2000


def _choose_prime(N, order, nclasses):
    """Smallest p = 1 (mod N) exceeding both 2*sqrt(order) and the matrix
    sizes, so degrees are determined and Faddeev divisions stay legal."""
    lower = max(2 * isqrt(order) + 1, order, nclasses, 2)
    p = N + 1
    while p <= lower or not isprime(p):
        p += N
    return p


def _primitive_root_of_unity(p, N):
    """A fixed element of multiplicative order N in F_p (needs N | p-1)."""
    assert (p - 1) % N == 0
    factors = list(factorint(p - 1))
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            break
        g += 1
    return pow(g, (p - 1) // N, p)


def _nullspace_mod(M, p):
    """Basis of the right nullspace of M over F_p (rows of the result)."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [row[:] for row in M]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] % p), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [(x * inv) % p for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] % p:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-A[ri][fc]) % p
        basis.append(v)
    return basis


def _solve_mod(B, w, p):
    """Solve B x = w over F_p, B given as list of column vectors."""
    rows = len(B[0])
    cols = len(B)
    A = [[B[j][i] % p for j in range(cols)] + [w[i] % p] for i in range(rows)]
    r = 0
    pivots = []
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [(x * inv) % p for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    x = [0] * cols
    for ri, pc in enumerate(pivots):
        x[pc] = A[ri][cols]
    return x


def _charpoly_mod(R, p):
    """Characteristic polynomial coefficients [1, c1, ..., cn] mod p
    (Faddeev-LeVerrier; requires p > n)."""
    n = len(R)
    coeffs = [1]
    M = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        RM = [[sum(R[i][t] * M[t][j] for t in range(n)) % p for j in range(n)] for i in range(n)]
        tr = sum(RM[i][i] for i in range(n)) % p
        ck = (-tr * pow(k, p - 2, p)) % p
        coeffs.append(ck)
        for i in range(n):
            RM[i][i] = (RM[i][i] + ck) % p
        M = RM
    return coeffs


def _poly_roots_mod(coeffs, p):
    """All roots in F_p of the monic polynomial with the given coefficients
    (highest degree first), found by direct scan."""
    roots = []
    for x in range(p):
        acc = 0
        for c in coeffs:
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


class CharacterTable:
    """Complete exact character table of a finite permutation group."""

    def __init__(self, group: PermGroup):
        if group.order > _SCALE_LIMIT:
            raise ValueError(
                "group order %d exceeds the character-table scale limit %d"
                % (group.order, _SCALE_LIMIT)
            )
        self.group = group
        self.classes = group.conjugacy_classes()
        self.exponent = group.exponent()
        self.rows, self.degrees = self._dixon()
        self._validate()

    # -- construction ------------------------------------------------------

    def _dixon(self):
        G = self.group
        classes = self.classes
        r = len(classes)
        N = self.exponent
        p = _choose_prime(N, G.order, r)
        self._prime = p

        # bucket the elements by class
        members = [[] for _ in range(r)]
        for g in G.elements:
            members[G.class_index_of(g)].append(g)

        inv_class = [G.class_index_of(rep.inverse()) for rep, _ in classes]

        # class-sum matrices: (N_i)[j][k] = #{x in C_i : class(x^-1 rep_k) = j}
        reps = [rep for rep, _ in classes]
        mats = []
        for i in range(r):
            M = [[0] * r for _ in range(r)]
            for x in members[i]:
                xi = x.inverse()
                for k in range(r):
                    j = G.class_index_of(xi * reps[k])
                    M[j][k] += 1
            mats.append(M)

        # split the r-dimensional space into common eigenlines
        spaces = [[[1 if i == j else 0 for j in range(r)] for i in range(r)]]
        # spaces: list of subspace bases; each basis is a list of vectors
        for M in mats[1:]:
            if all(len(B) == 1 for B in spaces):
                break
            new_spaces = []
            for B in spaces:
                if len(B) == 1:
                    new_spaces.append(B)
                    continue
                dim = len(B)
                # restriction of M to span(B): column t is M*B[t] in B-coordinates
                images = []
                for v in B:
                    w = [sum(M[j][k] * v[k] for k in range(r)) % p for j in range(r)]
                    images.append(_solve_mod(B, w, p))
                R = [[images[t][s] for t in range(dim)] for s in range(dim)]
                total = 0
                for lam in _poly_roots_mod(_charpoly_mod(R, p), p):
                    shifted = [row[:] for row in R]
                    for i in range(dim):
                        shifted[i][i] = (shifted[i][i] - lam) % p
                    null = _nullspace_mod(shifted, p)
                    if not null:
                        continue
                    vecs = [
                        [sum(c[t] * B[t][k] for t in range(dim)) % p for k in range(r)]
                        for c in null
                    ]
                    new_spaces.append(vecs)
                    total += len(null)
                if total != dim:
                    raise TableError("class-sum matrix failed to diagonalize")
            spaces = new_spaces
        if any(len(B) != 1 for B in spaces) or len(spaces) != r:
            raise TableError("class-sum eigenspace splitting failed")

        sizes = [s for _, s in classes]
        order_mod = G.order % p
        rows = []
        degrees = []
        z = _primitive_root_of_unity(p, N)
        orders = [rep.order() for rep, _ in classes]
        for (vec,) in spaces:
            # normalize so the identity-class coordinate is 1
            if vec[0] % p == 0:
                raise TableError("eigenvector vanishes at the identity class")
            inv0 = pow(vec[0], p - 2, p)
            v = [(x * inv0) % p for x in vec]
            # degree from the second orthogonality sum
            t = 0
            for j in range(r):
                t = (t + v[j] * v[inv_class[j]] * pow(sizes[j], p - 2, p)) % p
            if t == 0:
                raise TableError("degenerate norm sum")
            dsq = (order_mod * pow(t, p - 2, p)) % p
            d = next((x for x in range(1, p) if (x * x) % p == dsq and 2 * x < p), None)
            if d is None:
                raise TableError("degree is not recoverable from F_p data")
            degrees.append(d)
            # character values mod p
            chi_p = [(d * v[j] * pow(sizes[j], p - 2, p)) % p for j in range(r)]
            # lift each value through root-of-unity multiplicities
            row = []
            for j in range(r):
                m = orders[j]
                zm = pow(z, N // m, p)
                minv = pow(m, p - 2, p)
                val = Cyclotomic.zero(N)
                for k in range(m):
                    mu = 0
                    for s in range(m):
                        mu = (mu + chi_p[self.power_class(j, s)] * pow(zm, (-k * s) % (p - 1), p)) % p
                    mu = (mu * minv) % p
                    if mu > d:
                        raise TableError("eigenvalue multiplicity %d exceeds degree %d" % (mu, d))
                    if mu:
                        val = val + mu * Cyclotomic.root_of_unity(N, k * (N // m))
                row.append(val)
            rows.append(row)

        # deterministic order: trivial first, then by degree and value key
        def row_key(row_deg):
            row, d = row_deg
            return (d, [tuple(v.coords) for v in row])

        trivial = None
        rest = []
        one = Cyclotomic.from_rational(1, N)
        for row, d in zip(rows, degrees):
            if d == 1 and all(v == one for v in row):
                trivial = (row, d)
            else:
                rest.append((row, d))
        if trivial is None:
            raise TableError("trivial character missing")
        rest.sort(key=row_key)
        ordered = [trivial] + rest
        return [rd[0] for rd in ordered], [rd[1] for rd in ordered]

    def _validate(self):
        G = self.group
        r = len(self.classes)
        if len(self.rows) != r:
            raise TableError("row count != class count")
        if sum(d * d for d in self.degrees) != G.order:
            raise TableError("degree squares do not sum to the group order")
        for i in range(r):
            for j in range(i, r):
                ip = self._inner(self.rows[i], self.rows[j])
                if ip != (1 if i == j else 0):
                    raise TableError("row orthogonality fails at (%d, %d)" % (i, j))

    # -- lookups -----------------------------------------------------------

    def power_class(self, class_idx, k):
        return self.group.power_map(class_idx, k)

    def nclasses(self):
        return len(self.classes)

    def value(self, row, class_idx):
        return self.rows[row][class_idx]

    def value_at(self, row, g):
        return self.rows[row][self.group.class_index_of(g)]

    def trivial_row(self):
        return 0

    # -- inner products and dimensions -------------------------------------

    def _inner(self, f, h):
        total = Cyclotomic.zero(self.exponent)
        for (rep, size), a, b in zip(self.classes, f, h):
            total = total + size * (a * b.conj())
        val = total * Fraction(1, self.group.order)
        if not val.is_rational():
            raise TableError("inner product is irrational")
        return val.rational_value()

    def inner_product(self, f, h):
        """Exact inner product of two class functions (lists of Cyclotomic)."""
        v = self._inner(f, h)
        if v.denominator != 1:
            raise TableError("inner product %s is not an integer" % v)
        return v.numerator

    def decompose(self, values):
        """Multiplicities of a class function over the irreducible rows."""
        mults = []
        for i in range(len(self.rows)):
            mults.append(self.inner_product(values, self.rows[i]))
        # exactness check: the function must be recovered
        for j in range(len(self.classes)):
            acc = Cyclotomic.zero(self.exponent)
            for i, m in enumerate(mults):
                acc = acc + m * self.rows[i][j]
            if acc != values[j]:
                raise TableError("class function is not a virtual character")
        return mults

    def fixed_space_dim(self, row, g):
        """dim of the <g>-fixed subspace in the row's representation."""
        G = self.group
        if g not in G:
            raise ValueError("element does not belong to the table's group")
        ci = G.class_index_of(g)
        m = self.classes[ci][0].order()
        total = Cyclotomic.zero(self.exponent)
        for k in range(m):
            total = total + self.rows[row][self.power_class(ci, k)]
        val = total * Fraction(1, m)
        if not val.is_rational():
            raise TableError("fixed-space dimension is irrational")
        v = val.rational_value()
        if v.denominator != 1 or v < 0:
            raise TableError("fixed-space dimension %s is not a nonnegative integer" % v)
        return v.numerator


def character_table(G: PermGroup) -> CharacterTable:
    """Memoized character table of G."""
    tab = getattr(G, "_chartab", None)
    if tab is None:
        tab = CharacterTable(G)
        G._chartab = tab
    return tab


class VirtualCharacter:
    """An integer combination of the irreducible rows of a table."""

    def __init__(self, table, mults):
        if len(mults) != table.nclasses():
            raise ValueError("multiplicity vector has the wrong length")
        self.table = table
        self.mults = list(mults)

    @property
    def degree(self):
        return sum(m * d for m, d in zip(self.mults, self.table.degrees))

    def is_character(self):
        return all(m >= 0 for m in self.mults)

    def values(self):
        tab = self.table
        out = []
        for j in range(tab.nclasses()):
            acc = Cyclotomic.zero(tab.exponent)
            for i, m in enumerate(self.mults):
                if m:
                    acc = acc + m * tab.rows[i][j]
            out.append(acc)
        return out

    def __add__(self, other):
        assert self.table is other.table
        return VirtualCharacter(self.table, [a + b for a, b in zip(self.mults, other.mults)])

    def __sub__(self, other):
        assert self.table is other.table
        return VirtualCharacter(self.table, [a - b for a, b in zip(self.mults, other.mults)])

    def __eq__(self, other):
        return (
            isinstance(other, VirtualCharacter)
            and self.table is other.table
            and self.mults == other.mults
        )

    def fixed_dim(self, g):
        """Sum of per-row fixed-space dimensions, weighted by multiplicity."""
        return sum(
            m * self.table.fixed_space_dim(i, g) for i, m in enumerate(self.mults) if m
        )

    def restrict(self, subtable):
        """Restriction to a subgroup, re-decomposed in the subgroup's table."""
        big = self.table
        vals = self.values()
        L = lcm(big.exponent, subtable.exponent)
        out = []
        for rep, _ in subtable.classes:
            v = vals[big.group.class_index_of(rep)]
            out.append(v)
        # move the values into the subgroup's conductor via a common lift
        lifted = [v.lift(L) for v in out]
        sub_rows_lifted = [[v.lift(L) for v in row] for row in subtable.rows]
        mults = []
        order = subtable.group.order
        for row in sub_rows_lifted:
            total = Cyclotomic.zero(L)
            for (rep, size), a, b in zip(subtable.classes, lifted, row):
                total = total + size * (a * b.conj())
            val = total * Fraction(1, order)
            if not val.is_rational() or val.rational_value().denominator != 1:
                raise TableError("restriction has non-integral multiplicities")
            mults.append(val.rational_value().numerator)
        vc = VirtualCharacter(subtable, mults)
        # exactness: the restricted values must be reproduced
        back = vc.values()
        for b, v in zip(back, lifted):
            if b.lift(L) != v:
                raise TableError("restriction decomposition does not reproduce values")
        return vc


def trivial_character(table):
    mults = [0] * table.nclasses()
    mults[0] = 1
    return VirtualCharacter(table, mults)


def regular_character(table):
    return VirtualCharacter(table, list(table.degrees))


def perm_character(G: PermGroup, table=None) -> VirtualCharacter:
    """Permutation character of G's natural action, decomposed."""
    tab = table if table is not None else character_table(G)
    vals = []
    for rep, _ in tab.classes:
        fixed = sum(1 for i in range(G.degree) if rep.imgs[i] == i)
        vals.append(Cyclotomic.from_rational(fixed, tab.exponent))
    mults = tab.decompose(vals)
    return VirtualCharacter(tab, mults)
