"""Exact permutation and finite-permutation-group engine.

Permutations are stored as 0-based image tuples internally; every external
surface (JSON, repr, cycle notation) is 1-based.  The composition convention
is fixed once and for all: (p * q)(i) = q(p(i)), apply p first.  Groups are
materialized by full closure; the intended scale is order <= ~10,000, so
correctness beats asymptotics throughout.
"""

from __future__ import annotations


class Permutation:
    """A permutation of {1..n}, immutable and hashable."""

    __slots__ = ("imgs",)

    def __init__(self, images, zero_based=False):
        if zero_based:
            imgs = tuple(images)
        else:
            imgs = tuple(i - 1 for i in images)
        n = len(imgs)
        if sorted(imgs) != list(range(n)):
            raise ValueError("images are not a bijection of {1..%d}" % n)
        self.imgs = imgs

    @classmethod
    def identity(cls, n):
        return cls(range(n), zero_based=True)

    @classmethod
    def from_cycles(cls, n, cycles):
        """Build from 1-based disjoint cycles, e.g. from_cycles(5, [(1,2,3)])."""
        imgs = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a - 1] = b - 1
        return cls(imgs, zero_based=True)

    @property
    def degree(self):
        return len(self.imgs)

    @property
    def images(self):
        """1-based image list (the wire format)."""
        return [i + 1 for i in self.imgs]

    def __mul__(self, other):
        """(p * q)(i) = q(p(i)): apply self first, then other."""
        if len(self.imgs) != len(other.imgs):
            raise ValueError("degree mismatch: %d vs %d" % (len(self.imgs), len(other.imgs)))
        o = other.imgs
        return Permutation(tuple(o[i] for i in self.imgs), zero_based=True)

    def inverse(self):
        inv = [0] * len(self.imgs)
        for i, j in enumerate(self.imgs):
            inv[j] = i
        return Permutation(inv, zero_based=True)

    def __pow__(self, k):
        n = len(self.imgs)
        result = Permutation.identity(n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def __call__(self, point):
        """Image of a 1-based point."""
        return self.imgs[point - 1] + 1

    def order(self):
        k = 1
        p = self
        e = tuple(range(len(self.imgs)))
        while p.imgs != e:
            p = p * self
            k += 1
        return k

    def cycles(self):
        """Disjoint cycles as 1-based tuples, fixed points omitted."""
        seen = [False] * len(self.imgs)
        out = []
        for start in range(len(self.imgs)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.imgs[i]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_count(self):
        """Number of cycles including fixed points (for Riemann-Hurwitz)."""
        seen = [False] * len(self.imgs)
        count = 0
        for start in range(len(self.imgs)):
            if seen[start]:
                continue
            count += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = self.imgs[i]
        return count

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.imgs))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.imgs == other.imgs

    def __lt__(self, other):
        return self.imgs < other.imgs

    def __hash__(self):
        return hash(self.imgs)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "Permutation(id/%d)" % self.degree
        return "Permutation(%s)" % " ".join("(%s)" % " ".join(map(str, c)) for c in cyc)


def compose(p, q):
    """Apply p first, then q."""
    return p * q


def _closure(gens):
    """All products of the generators, by breadth-first multiplication."""
    n = gens[0].degree
    ident = Permutation.identity(n)
    seen = {ident.imgs: ident}
    frontier = [ident]
    gen_imgs = [g.imgs for g in gens]
    while frontier:
        new = []
        for p in frontier:
            pi = p.imgs
            for gi in gen_imgs:
                prod = tuple(gi[i] for i in pi)
                if prod not in seen:
                    q = Permutation(prod, zero_based=True)
                    seen[prod] = q
                    new.append(q)
        frontier = new
    return seen


class PermGroup:
    """A finite permutation group, fully enumerated.

    Conjugacy data (classes, power map) is computed lazily on first use.
    All values are immutable after construction; operations never mutate.
    """

    def __init__(self, generators):
        generators = list(generators)
        if not generators:
            raise ValueError("empty generator list")
        n = generators[0].degree
        for g in generators:
            if g.degree != n:
                raise ValueError("generator degree mismatch")
        self.degree = n
        self.generators = generators
        self._elt_map = _closure(generators)
        self.order = len(self._elt_map)
        self._sorted_elements = None
        self._classes = None
        self._class_index = None

    @property
    def elements(self):
        if self._sorted_elements is None:
            self._sorted_elements = sorted(self._elt_map.values())
        return self._sorted_elements

    def __contains__(self, p):
        return isinstance(p, Permutation) and p.imgs in self._elt_map

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order

    def identity(self):
        return Permutation.identity(self.degree)

    def is_subgroup(self, other):
        """True if self is a subgroup of other."""
        return self.degree == other.degree and all(g in other for g in self.generators)

    def exponent(self):
        from math import lcm

        e = 1
        for rep, _ in self.conjugacy_classes():
            e = lcm(e, rep.order())
        return e

    def small_generating_set(self):
        """Greedy reduction of the element list to a short generating set."""
        gens = []
        sub = None
        for g in self.elements:
            if g.is_identity():
                continue
            if sub is not None and g in sub:
                continue
            gens.append(g)
            sub = PermGroup(gens)
            if sub.order == self.order:
                break
        if not gens:  # trivial group
            return [self.identity()]
        return gens

    # -- conjugacy ---------------------------------------------------------

    def conjugacy_classes(self):
        """List of (representative, size), identity class first.

        Classes are conjugation orbits computed by brute force; within each
        class the representative is the minimal element, and classes are
        ordered identity first, then by representative.
        """
        if self._classes is None:
            self._compute_classes()
        return self._classes

    def class_index_of(self, p):
        """Index of the class containing p (in conjugacy_classes order)."""
        if self._class_index is None:
            self._compute_classes()
        return self._class_index[p.imgs]

    def _compute_classes(self):
        gens = self.small_generating_set()
        gen_pairs = [(g, g.inverse()) for g in gens]
        unseen = set(self._elt_map)
        orbits = []
        for e in self.elements:
            if e.imgs not in unseen:
                continue
            # conjugation orbit of e under the generators
            orbit = {e.imgs: e}
            frontier = [e]
            while frontier:
                new = []
                for p in frontier:
                    for g, ginv in gen_pairs:
                        q = ginv * p * g
                        if q.imgs not in orbit:
                            orbit[q.imgs] = q
                            new.append(q)
                frontier = new
            unseen -= orbit.keys()
            orbits.append((min(orbit.values()), orbit))
        # identity class first, then by representative
        orbits.sort(key=lambda ro: (not ro[0].is_identity(), ro[0].imgs))
        self._classes = [(rep, len(orbit)) for rep, orbit in orbits]
        self._class_index = {
            imgs: ci for ci, (_, orbit) in enumerate(orbits) for imgs in orbit
        }

    def power_map(self, class_idx, k):
        """Class index of rep^k for the given class."""
        rep, _ = self.conjugacy_classes()[class_idx]
        return self.class_index_of(rep ** (k % rep.order()))

    # -- subgroups and actions ---------------------------------------------

    def stabilizer(self, point):
        """Subgroup fixing a 1-based point."""
        if not 1 <= point <= self.degree:
            raise ValueError("point %d out of range 1..%d" % (point, self.degree))
        fixing = [g for g in self.elements if g.imgs[point - 1] == point - 1]
        return PermGroup(_reduce_gens(fixing, self.degree))

    def normalizer(self, S):
        """N_G(S) for a subgroup S of self."""
        if not S.is_subgroup(self):
            raise ValueError("S is not a subgroup of G")
        sgens = S.small_generating_set()
        members = []
        for h in self.elements:
            hinv = h.inverse()
            if all((hinv * s * h) in S for s in sgens):
                members.append(h)
        return PermGroup(_reduce_gens(members, self.degree))

    def coset_action(self, S):
        """Permutation image of G on the cosets of a subgroup S.

        Returns (image: PermGroup, reps: list of coset representatives,
        project: element -> Permutation on cosets).  The kernel of the
        projection is the core of S in G; when S is normal the image is the
        quotient group G/S.
        """
        if not S.is_subgroup(self):
            raise ValueError("S is not a subgroup of G")
        reps = self.coset_reps(S)
        index = {}
        for i, r in enumerate(reps):
            index[i] = r
        rep_of = self._coset_finder(S, reps)

        def project(g):
            if g not in self:
                raise ValueError("element not in G")
            return Permutation([rep_of(reps[i] * g) for i in range(len(reps))], zero_based=True)

        image = PermGroup([project(g) for g in self.generators])
        return image, reps, project

    def coset_reps(self, S):
        """Coset representatives of S in self (identity first, by orbit BFS)."""
        reps = [self.identity()]
        frontier = [self.identity()]
        while frontier:
            new = []
            for r in frontier:
                for g in self.generators:
                    cand = r * g
                    if all((cand * r2.inverse()) not in S for r2 in reps):
                        reps.append(cand)
                        new.append(cand)
            frontier = new
        return reps

    def _coset_finder(self, S, reps):
        inv_reps = [(i, r.inverse()) for i, r in enumerate(reps)]

        def rep_of(g):
            for i, rinv in inv_reps:
                if (g * rinv) in S:
                    return i
            raise ValueError("element lies in no coset: cosets incomplete")

        return rep_of


def _reduce_gens(elements, degree):
    """A short generating list for the group formed by the given elements."""
    if not elements:
        return [Permutation.identity(degree)]
    gens = []
    sub_set = {Permutation.identity(degree).imgs}
    for g in sorted(elements):
        if g.imgs in sub_set:
            continue
        gens.append(g)
        sub_set = set(_closure(gens).keys())
        if len(sub_set) == len(elements):
            break
    if not gens:
        return [Permutation.identity(degree)]
    return gens


def generate(gens):
    """Group generated by the permutations (the spec's generate op)."""
    return PermGroup(list(gens))


def trivial_group(n):
    return PermGroup([Permutation.identity(n)])


def cyclic_group(n):
    """Z/n as the regular cyclic group on n points."""
    return PermGroup([Permutation([(i + 1) % n for i in range(n)], zero_based=True)])


def symmetric_group(n):
    if n == 1:
        return trivial_group(1)
    gens = [Permutation.from_cycles(n, [(1, 2)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return PermGroup(gens)


def alternating_group(n):
    if n <= 2:
        return trivial_group(max(n, 1))
    gens = [Permutation.from_cycles(n, [(1, 2, 3)])]
    if n > 3:
        cyc = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
        gens.append(Permutation.from_cycles(n, [cyc]))
    return PermGroup(gens)


def direct_product(G, H):
    """G x H acting on the disjoint union of the two point sets."""
    n, m = G.degree, H.degree
    gens = []
    for g in G.generators:
        gens.append(Permutation(list(g.imgs) + [n + i for i in range(m)], zero_based=True))
    for h in H.generators:
        gens.append(Permutation(list(range(n)) + [n + i for i in h.imgs], zero_based=True))
    return PermGroup(gens)


def regular_representation(G):
    """The right-regular action of G on its own elements.

    Returns (group, elts) where elts lists G's elements in the point order
    used by the regular action, and group is the degree-|G| image.
    """
    elts = G.elements
    pos = {g.imgs: i for i, g in enumerate(elts)}
    gens = []
    for g in G.generators:
        gens.append(Permutation([pos[(e * g).imgs] for e in elts], zero_based=True))
    return PermGroup(gens), elts
