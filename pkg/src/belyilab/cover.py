"""Belyi covers as monodromy pairs and their Galois-closure data.

A cover is a transitive pair (x, y) with z = (x*y)^-1; the closure data
records H = <x, y>, J = Stab_H(1), W = N_H(J), the deck group D of the
intermediate Galois cover (W acting on the cosets of J), and per-branch
ramification records (e_j, d_j) computed on the cosets H/W.  The fiber
model: points of X over a branch point b are the <sigma_b>-orbits on H/J,
points of Z over b the <sigma_b>-orbits on H/W.
"""

from __future__ import annotations

from .chartab import VirtualCharacter, character_table
from .errors import InternalError, PreconditionError
from .permgroup import PermGroup, Permutation, regular_representation


class BelyiCover:
    """Monodromy pair of a cover of the line branched over {0, 1, oo}."""

    def __init__(self, x: Permutation, y: Permutation):
        if x.degree != y.degree:
            raise PreconditionError("x and y must have the same degree")
        self.degree = x.degree
        self.x = x
        self.y = y
        self.z = (x * y).inverse()
        if not self._transitive():
            raise PreconditionError("monodromy group is not transitive: cover is reducible")

    def _transitive(self):
        seen = {0}
        frontier = [0]
        while frontier:
            new = []
            for i in frontier:
                for p in (self.x, self.y):
                    j = p.imgs[i]
                    if j not in seen:
                        seen.add(j)
                        new.append(j)
            frontier = new
        return len(seen) == self.degree

    @classmethod
    def from_json(cls, data):
        """Cover from wire format {"degree": n, "x": [...], "y": [...]}.

        With "galois": true the generators are abstract and the cover is
        normalized to the regular action of the group they generate.
        """
        try:
            x = Permutation(data["x"])
            y = Permutation(data["y"])
        except (KeyError, TypeError) as exc:
            raise PreconditionError("cover JSON needs 'x' and 'y' image lists") from exc
        if "degree" in data and data["degree"] != x.degree:
            raise PreconditionError("declared degree does not match the permutations")
        if data.get("galois"):
            return cls.regular(x, y)
        return cls(x, y)

    @classmethod
    def regular(cls, x, y):
        """The regular (Galois) cover of the group generated by x and y."""
        G = PermGroup([x, y])
        R, _ = regular_representation(G)
        return cls(R.generators[0], R.generators[1])

    def to_json(self):
        return {"degree": self.degree, "x": self.x.images, "y": self.y.images}

    def sigma(self, b):
        return {"0": self.x, "1": self.y, "inf": self.z}[b]


BRANCH_POINTS = ("0", "1", "inf")


class ClosureData:
    """Galois-closure and branch data of a Belyi cover."""

    def __init__(self, cover, H, J, W, D, project, branch):
        self.cover = cover
        self.H = H
        self.J = J
        self.W = W
        self.D = D
        self.project = project  # W -> D homomorphism (on elements)
        self.branch = branch  # b -> list of (e_j, d_j)
        self.index_HW = H.order // W.order
        self.is_galois = J.order == 1

    def branch_points_of_Z(self):
        """Total number of points of Z over {0, 1, oo}."""
        return sum(len(recs) for recs in self.branch.values())


def _left_coset_reps(H, W):
    """Representatives of the left cosets gW, identity first."""
    reps = [H.identity()]
    inv_reps = [H.identity()]
    frontier = [H.identity()]
    while frontier:
        new = []
        for r in frontier:
            for g in H.generators:
                # left translation acts on the coset space, so BFS by
                # left-multiplying representatives visits every coset
                cand = g * r
                if all((ri * cand) not in W for ri in inv_reps):
                    reps.append(cand)
                    inv_reps.append(cand.inverse())
                    new.append(cand)
        frontier = new
    return reps, inv_reps


def validate(cover: BelyiCover) -> ClosureData:
    """Compute the full closure data of a cover."""
    H = PermGroup([cover.x, cover.y])
    J = H.stabilizer(1)
    W = _normalizer_of_point_stabilizer(H, J)
    D, _, project = W.coset_action(J)
    reps, inv_reps = _left_coset_reps(H, W)
    ncosets = len(reps)
    if ncosets * W.order != H.order:
        raise InternalError("left coset enumeration is incomplete")

    def coset_index(g):
        for i, ri in enumerate(inv_reps):
            if (ri * g) in W:
                return i
        raise InternalError("element escaped the coset decomposition")

    branch = {}
    for b in BRANCH_POINTS:
        sigma = cover.sigma(b)
        action = [coset_index(sigma * reps[i]) for i in range(ncosets)]
        seen = [False] * ncosets
        records = []
        for start in range(ncosets):
            if seen[start]:
                continue
            orbit = []
            i = start
            while not seen[i]:
                seen[i] = True
                orbit.append(i)
                i = action[i]
            e = len(orbit)
            g = reps[start]
            w = g.inverse() * (sigma**e) * g
            if w not in W:
                raise InternalError("ramification index does not return to W")
            records.append((e, project(w)))
        if sum(e for e, _ in records) != ncosets:
            raise InternalError("ramification indices do not sum to [H:W]")
        branch[b] = records
    return ClosureData(cover, H, J, W, D, project, branch)


def _normalizer_of_point_stabilizer(H, J):
    """N_H(J) for J = Stab_H(1), via the fixed-point set of J.

    For transitive H all point stabilizers are conjugate of equal order, so
    Stab(b) = J exactly when b is fixed by J, and h normalizes J iff h maps
    1 into Fix(J).  Much faster than the generic normalizer scan.
    """
    from .permgroup import _reduce_gens

    gens = J.small_generating_set()
    fixed = [i for i in range(H.degree) if all(g.imgs[i] == i for g in gens)]
    fixed_set = set(fixed)
    members = [h for h in H.elements if h.imgs[0] in fixed_set]
    return PermGroup(_reduce_gens(members, H.degree))


def genus(cover: BelyiCover) -> int:
    """Genus of X from the cycle counts of x, y, z (Riemann-Hurwitz)."""
    n = cover.degree
    total = -2 * n
    for sigma in (cover.x, cover.y, cover.z):
        total += n - sigma.cycle_count()
    if total % 2:
        raise InternalError("Riemann-Hurwitz total is odd")
    g = total // 2 + 1
    if g < 0:
        raise InternalError("negative genus: invalid monodromy")
    return g


def tate_characters(cd: ClosureData, table=None):
    """The three Tate-module characters (left, middle, jac) of the deck
    group D, with jac = middle - left checked effective of degree 2*genus."""
    tab = table if table is not None else character_table(cd.D)
    r = tab.nclasses()
    # middle term: trivial + [H:W] * regular
    middle_mults = [cd.index_HW * d for d in tab.degrees]
    middle_mults[0] += 1
    middle = VirtualCharacter(tab, middle_mults)
    # left term: mult of V = -dim V^D + sum over branch records of dim V^<d_j>
    left_mults = []
    for i in range(r):
        n_V = -(1 if i == 0 else 0)
        for b in BRANCH_POINTS:
            for _, d in cd.branch[b]:
                n_V += tab.fixed_space_dim(i, d)
        left_mults.append(n_V)
    left = VirtualCharacter(tab, left_mults)
    jac = middle - left
    if any(m < 0 for m in jac.mults):
        raise InternalError("Jacobian character has a negative multiplicity")
    g = genus(cd.cover)
    if jac.degree != 2 * g:
        raise InternalError(
            "Jacobian character degree %d != 2*genus = %d" % (jac.degree, 2 * g)
        )
    return left, middle, jac


def analysis_report(cover: BelyiCover) -> dict:
    """JSON-ready structural summary of a cover."""
    cd = validate(cover)
    g = genus(cover)
    report = {
        "degree": cover.degree,
        "genus": g,
        "order_H": cd.H.order,
        "order_J": cd.J.order,
        "order_W": cd.W.order,
        "order_D": cd.D.order,
        "index_HW": cd.index_HW,
        "is_galois": cd.is_galois,
        "branch": {
            b: [{"e": e, "order_d": d.order()} for e, d in cd.branch[b]]
            for b in BRANCH_POINTS
        },
    }
    return report
