import random

import pytest

from belyilab.chartab import character_table
from belyilab.cover import (
    BelyiCover,
    analysis_report,
    genus,
    tate_characters,
    validate,
)
from belyilab.cyclotomic import Cyclotomic
from belyilab.errors import PreconditionError
from belyilab.permgroup import Permutation, generate


def perm(n, *cycles):
    return Permutation.from_cycles(n, list(cycles))


def a5_degree5_cover():
    return BelyiCover(perm(5, (1, 2, 3)), perm(5, (1, 2, 3, 4, 5)))


def a5_regular_cover():
    return BelyiCover.regular(perm(5, (1, 2, 3)), perm(5, (1, 2, 3, 4, 5)))


def cubic_cover():
    # y^3 = t(t-1): cyclic degree-3 Galois cover
    return BelyiCover(perm(3, (1, 2, 3)), perm(3, (1, 2, 3)))


def isogeny_cover():
    # A4 on the cosets of an order-2 subgroup; x, y, z all of order 3.
    # Frozen from the coset action of (1 2 3), (1 4 2) on <(1 2)(3 4)>;
    # re-derived below in test_isogeny_cover_matches_coset_action.
    return BelyiCover(Permutation([2, 4, 5, 1, 6, 3]), Permutation([3, 4, 5, 6, 1, 2]))


class TestBelyiCover:
    def test_intransitive_rejected(self):
        with pytest.raises(PreconditionError):
            BelyiCover(perm(4, (1, 2)), perm(4, (3, 4)))

    def test_xyz_product_is_identity(self):
        c = a5_degree5_cover()
        assert (c.x * c.y * c.z).is_identity()

    def test_json_roundtrip(self):
        c = a5_degree5_cover()
        assert BelyiCover.from_json(c.to_json()).x == c.x

    def test_json_galois_flag_normalizes_to_regular(self):
        c = BelyiCover.from_json(
            {"degree": 3, "x": [2, 3, 1], "y": [2, 3, 1], "galois": True}
        )
        assert c.degree == 3  # Z/3 regular action is already degree 3
        c2 = BelyiCover.from_json(
            {"degree": 5, "x": [2, 3, 1, 4, 5], "y": [2, 3, 4, 5, 1], "galois": True}
        )
        assert c2.degree == 60

    def test_degree_mismatch_rejected(self):
        with pytest.raises(PreconditionError):
            BelyiCover.from_json({"degree": 4, "x": [2, 3, 1], "y": [2, 3, 1]})


class TestClosure:
    def test_a5_degree5_closure(self):
        cd = validate(a5_degree5_cover())
        assert cd.H.order == 60
        assert cd.J.order == 12
        assert cd.W.order == 12
        assert cd.D.order == 1
        assert cd.index_HW == 5
        assert not cd.is_galois

    def test_a5_regular_closure(self):
        cd = validate(a5_regular_cover())
        assert cd.is_galois
        assert cd.D.order == 60
        records = [cd.branch[b] for b in ("0", "1", "inf")]
        assert all(len(r) == 1 for r in records)
        orders = [r[0][1].order() for r in records]
        assert orders == [3, 5, 5]
        assert all(r[0][0] == 1 for r in records)

    def test_trivial_cover(self):
        c = BelyiCover(Permutation([1]), Permutation([1]))
        cd = validate(c)
        assert cd.H.order == 1 and cd.is_galois
        assert genus(c) == 0

    def test_ramification_sums(self):
        for cover in (a5_degree5_cover(), isogeny_cover(), cubic_cover()):
            cd = validate(cover)
            for b in ("0", "1", "inf"):
                assert sum(e for e, _ in cd.branch[b]) == cd.index_HW

    def test_fast_normalizer_agrees_with_generic(self):
        for cover in (a5_degree5_cover(), isogeny_cover()):
            cd = validate(cover)
            generic = cd.H.normalizer(cd.J)
            assert generic.order == cd.W.order
            assert all(g in generic for g in cd.W.generators)

    def test_isogeny_cover_matches_coset_action(self):
        A4 = generate([perm(4, (1, 2, 3)), perm(4, (1, 4, 2))])
        S = generate([perm(4, (1, 2), (3, 4))])
        _, _, project = A4.coset_action(S)
        c = isogeny_cover()
        assert project(perm(4, (1, 2, 3))) == c.x
        assert project(perm(4, (1, 4, 2))) == c.y


class TestGenus:
    def test_cubic_curve(self):
        assert genus(cubic_cover()) == 1

    def test_conic(self):
        assert genus(BelyiCover(perm(2, (1, 2)), perm(2, (1, 2)))) == 0

    def test_a5_regular_genus9(self):
        assert genus(a5_regular_cover()) == 9

    def test_isogeny_cover_genus1(self):
        assert genus(isogeny_cover()) == 1


class TestTateCharacters:
    def test_cubic_jac_two_conjugate_characters(self):
        cd = validate(cubic_cover())
        tab = character_table(cd.D)
        left, middle, jac = tate_characters(cd, tab)
        assert jac.degree == 2
        assert jac.mults[0] == 0  # no trivial part
        nontrivial = [i for i, m in enumerate(jac.mults) if m]
        assert len(nontrivial) == 2 and all(jac.mults[i] == 1 for i in nontrivial)
        i, j = nontrivial
        # the two rows are complex conjugate
        assert all(
            tab.rows[i][k].conj() == tab.rows[j][k] for k in range(tab.nclasses())
        )

    def test_a5_regular_degrees(self):
        cd = validate(a5_regular_cover())
        left, middle, jac = tate_characters(cd)
        assert left.degree == 43
        assert middle.degree == 61
        assert jac.degree == 18

    def test_a5_degree5_trivial_deck(self):
        cd = validate(a5_degree5_cover())
        left, middle, jac = tate_characters(cd)
        assert left.mults == [4]
        assert middle.mults == [6]
        assert jac.degree == 2

    def test_isogeny_cover_paper_values(self):
        cd = validate(isogeny_cover())
        left, middle, jac = tate_characters(cd)
        assert left.mults[0] == 2  # n_V for the trivial character
        assert middle.mults[0] == 4  # m_V for the trivial character
        assert jac.degree == 2

    def test_middle_is_trivial_plus_regular(self):
        for cover in (cubic_cover(), isogeny_cover(), a5_regular_cover()):
            cd = validate(cover)
            tab = character_table(cd.D)
            _, middle, _ = tate_characters(cd, tab)
            expect = [cd.index_HW * d for d in tab.degrees]
            expect[0] += 1
            assert middle.mults == expect


def random_transitive_cover(rng, max_degree=8):
    while True:
        n = rng.randint(2, max_degree)
        x = Permutation(rng.sample(range(1, n + 1), n))
        y = Permutation(rng.sample(range(1, n + 1), n))
        try:
            return BelyiCover(x, y)
        except PreconditionError:
            continue


class TestRandomCoverInvariants:
    def test_structural_invariants_sample(self):
        rng = random.Random(20108)
        for _ in range(25):
            cover = random_transitive_cover(rng, max_degree=6)
            cd = validate(cover)
            tab = character_table(cd.D)
            left, middle, jac = tate_characters(cd, tab)
            g = genus(cover)
            assert jac.degree == 2 * g
            for n_V, m_row, deg in zip(left.mults, middle.mults, tab.degrees):
                assert 0 <= n_V <= m_row

    def test_representative_choice_independence(self):
        # recompute each d_j from every coset representative in its orbit:
        # the fixed-space dimensions must not change
        rng = random.Random(977)
        for _ in range(10):
            cover = random_transitive_cover(rng, max_degree=6)
            cd = validate(cover)
            tab = character_table(cd.D)
            from belyilab.cover import _left_coset_reps

            reps, inv_reps = _left_coset_reps(cd.H, cd.W)

            def coset_index(g):
                for i, ri in enumerate(inv_reps):
                    if (ri * g) in cd.W:
                        return i
                raise AssertionError

            for b in ("0", "1", "inf"):
                sigma = cover.sigma(b)
                action = [coset_index(sigma * reps[i]) for i in range(len(reps))]
                seen = [False] * len(reps)
                ref = sorted(
                    tuple(tab.fixed_space_dim(r, d) for r in range(tab.nclasses()))
                    for _, d in cd.branch[b]
                )
                got = []
                for start in range(len(reps)):
                    if seen[start]:
                        continue
                    orbit = []
                    i = start
                    while not seen[i]:
                        seen[i] = True
                        orbit.append(i)
                        i = action[i]
                    e = len(orbit)
                    dims = None
                    for o in orbit:
                        g0 = reps[o]
                        w = g0.inverse() * (sigma**e) * g0
                        d = cd.project(w)
                        cur = tuple(
                            tab.fixed_space_dim(r, d) for r in range(tab.nclasses())
                        )
                        if dims is None:
                            dims = cur
                        else:
                            assert cur == dims
                    got.append(dims)
                assert sorted(got) == ref


def test_analysis_report_shape():
    rep = analysis_report(cubic_cover())
    assert rep["genus"] == 1
    assert rep["order_H"] == 3
    assert rep["is_galois"] is True
    # Galois cover: Z = P^1, single unramified record carrying d of order 3
    assert rep["branch"]["0"] == [{"e": 1, "order_d": 3}]
