"""Constructive generator lifting through surjections of finite groups.

Any generating d-tuple of a quotient G2 = psi(G1) lifts to a generating
d-tuple of G1 as soon as d is at least the minimal generator number of
G1.  lift_generators finds a witness by deterministic lexicographic fiber
search; count_lifts counts all witnesses over a fixed tuple, which is the
quantity whose tuple-independence drives the standard proof.

Groups may be PermGroups or multiplication-table groups; everything is
converted to tables internally and witnesses are translated back.
"""

from __future__ import annotations

import itertools

from .errors import InternalError, PreconditionError
from .groups import TableGroup, homomorphism_from_generators
from .permgroup import PermGroup


def _as_table(G):
    """(TableGroup, to_index, from_index) for a PermGroup or TableGroup."""
    if isinstance(G, TableGroup):
        return G, (lambda x: x), (lambda i: i)
    if isinstance(G, PermGroup):
        T = TableGroup.from_permgroup(G)
        pos = {name: i for i, name in enumerate(T.names)}
        return T, (lambda x: pos[x]), (lambda i: T.names[i])
    raise PreconditionError("expected a PermGroup or a TableGroup")


class SurjectionProblem:
    """A surjection psi: G1 -> G2 together with a generating tuple of G2."""

    def __init__(self, G1, G2, psi, S2):
        self.T1, self.to1, self.from1 = _as_table(G1)
        self.T2, self.to2, self.from2 = _as_table(G2)
        if callable(psi):
            full = [self.to2(psi(self.from1(a))) for a in range(self.T1.n)]
        else:
            gens = [self.to1(g) for g in psi]
            images = [self.to2(psi[g]) for g in psi]
            full = homomorphism_from_generators(self.T1, self.T2, gens, images)
            if full is None:
                raise PreconditionError("psi does not extend to a homomorphism")
        for a in range(self.T1.n):
            for b in range(self.T1.n):
                if full[self.T1.mult(a, b)] != self.T2.mult(full[a], full[b]):
                    raise PreconditionError("psi is not a homomorphism")
        if len(set(full)) != self.T2.n:
            raise PreconditionError("psi is not surjective")
        self.psi = full
        self.S2 = [self.to2(s) for s in S2]
        if not self.T2.generates(self.S2):
            raise PreconditionError("S2 does not generate G2")

    @property
    def d(self):
        return len(self.S2)

    def fibers(self):
        return [
            [a for a in range(self.T1.n) if self.psi[a] == s] for s in self.S2
        ]


def min_generators(G) -> int:
    """The least d such that G has a generating d-tuple."""
    T, _, _ = _as_table(G)
    if T.n == 1:
        return 0
    d = 1
    while True:
        for tup in itertools.product(range(T.n), repeat=d):
            if T.generates(list(tup)):
                return d
        d += 1


def lift_generators(p: SurjectionProblem):
    """The lexicographically least tuple S1 with psi(S1) = S2 elementwise
    and <S1> = G1.

    A valid instance always has a lift; exhausting the search space on one
    is an internal defect, not a user error.
    """
    if p.d < min_generators(p.T1):
        raise PreconditionError(
            "tuple length %d is below the minimal generator number of G1" % p.d
        )
    for tup in itertools.product(*p.fibers()):
        if p.T1.generates(list(tup)):
            return tuple(p.from1(a) for a in tup)
    raise InternalError("no lift found on a valid instance")


def count_lifts(p: SurjectionProblem) -> int:
    """The number of generating tuples of G1 over S2."""
    count = 0
    for tup in itertools.product(*p.fibers()):
        if p.T1.generates(list(tup)):
            count += 1
    return count
