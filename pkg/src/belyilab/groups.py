"""Small abstract finite groups as multiplication tables.

Quotients, extensions and semidirect products rarely come with a natural
small permutation degree, so parts of the library work with explicit
multiplication tables instead.  Elements are indices 0..n-1 with 0 the
identity.  Everything here is brute force on purpose; the scale is tiny.
"""

from __future__ import annotations

from .errors import PreconditionError


class TableGroup:
    def __init__(self, table, names=None):
        n = len(table)
        self.n = n
        self.table = tuple(tuple(row) for row in table)
        self.names = names
        for row in self.table:
            if len(row) != n or sorted(row) != list(range(n)):
                raise PreconditionError("multiplication table rows must be permutations")
        for j in range(n):
            if sorted(self.table[i][j] for i in range(n)) != list(range(n)):
                raise PreconditionError("multiplication table columns must be permutations")
        if any(self.table[0][j] != j for j in range(n)) or any(
            self.table[i][0] != i for i in range(n)
        ):
            raise PreconditionError("element 0 must be the identity")
        # associativity (cubic, but n is small)
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise PreconditionError("multiplication table is not associative")
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == 0:
                    inv[a] = b
                    break
        if any(v is None for v in inv):
            raise PreconditionError("multiplication table has no inverses")
        self.inv = inv

    @classmethod
    def from_permgroup(cls, G):
        elts = G.elements
        pos = {g.imgs: i for i, g in enumerate(elts)}
        ident = G.identity()
        order = [pos[ident.imgs]] + [i for i in range(len(elts)) if i != pos[ident.imgs]]
        relabel = {old: new for new, old in enumerate(order)}
        table = [[0] * len(elts) for _ in range(len(elts))]
        for a, ga in enumerate(elts):
            for b, gb in enumerate(elts):
                table[relabel[a]][relabel[b]] = relabel[pos[(ga * gb).imgs]]
        names = [None] * len(elts)
        for old, new in relabel.items():
            names[new] = elts[old]
        return cls(table, names=names)

    def mult(self, a, b):
        return self.table[a][b]

    def order_of(self, a):
        k = 1
        x = a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def closure(self, gens):
        seen = {0}
        frontier = [0]
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = self.table[a][g]
                    if b not in seen:
                        seen.add(b)
                        new.append(b)
            frontier = new
        return sorted(seen)

    def generates(self, gens):
        return len(self.closure(gens)) == self.n

    def small_generating_set(self):
        gens = []
        have = {0}
        for a in range(self.n):
            if a in have:
                continue
            gens.append(a)
            have = set(self.closure(gens))
            if len(have) == self.n:
                break
        return gens

    def words(self, gens):
        """Express each element as a word (list of generator indices)."""
        word = {0: []}
        frontier = [0]
        while frontier:
            new = []
            for a in frontier:
                for gi, g in enumerate(gens):
                    b = self.table[a][g]
                    if b not in word:
                        word[b] = word[a] + [gi]
                        new.append(b)
            frontier = new
        if len(word) != self.n:
            raise PreconditionError("the given elements do not generate the group")
        return word

    def is_abelian(self):
        return all(
            self.table[a][b] == self.table[b][a] for a in range(self.n) for b in range(self.n)
        )

    def order_profile(self):
        prof = {}
        for a in range(self.n):
            o = self.order_of(a)
            prof[o] = prof.get(o, 0) + 1
        return prof


def homomorphism_from_generators(src: TableGroup, dst: TableGroup, gens, images):
    """The homomorphism src -> dst sending gens to images, as an image
    list, or None if no such homomorphism exists."""
    word = src.words(gens)
    out = [None] * src.n
    for a in range(src.n):
        v = 0
        for gi in word[a]:
            v = dst.table[v][images[gi]]
        out[a] = v
    # verify multiplicativity
    for a in range(src.n):
        for b in range(src.n):
            if out[src.table[a][b]] != dst.table[out[a]][out[b]]:
                return None
    return out


def automorphisms(T: TableGroup):
    """All automorphisms, as image lists (brute force over generator images)."""
    gens = T.small_generating_set()
    if not gens:
        return [[0]]
    orders = [T.order_of(g) for g in gens]
    pools = [[a for a in range(T.n) if T.order_of(a) == o] for o in orders]
    out = []
    def rec(i, chosen):
        if i == len(gens):
            f = homomorphism_from_generators(T, T, gens, chosen)
            if f is not None and len(set(f)) == T.n:
                out.append(f)
            return
        for a in pools[i]:
            rec(i + 1, chosen + [a])
    rec(0, [])
    return out


def isomorphic(A: TableGroup, B: TableGroup):
    """Brute-force isomorphism test for small groups."""
    if A.n != B.n or A.order_profile() != B.order_profile():
        return False
    gens = A.small_generating_set()
    if not gens:
        return True
    orders = [A.order_of(g) for g in gens]
    pools = [[b for b in range(B.n) if B.order_of(b) == o] for o in orders]
    found = []
    def rec(i, chosen):
        if found:
            return
        if i == len(gens):
            f = homomorphism_from_generators(A, B, gens, chosen)
            if f is not None and len(set(f)) == A.n:
                found.append(f)
            return
        for b in pools[i]:
            rec(i + 1, chosen + [b])
    rec(0, [])
    return bool(found)


def cyclic_table(n):
    return TableGroup([[(i + j) % n for j in range(n)] for i in range(n)])
