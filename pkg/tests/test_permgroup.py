import pytest
from hypothesis import given, strategies as st

from belyilab.permgroup import (
    Permutation,
    PermGroup,
    alternating_group,
    compose,
    cyclic_group,
    direct_product,
    generate,
    regular_representation,
    symmetric_group,
    trivial_group,
)


def perm(n, *cycles):
    return Permutation.from_cycles(n, list(cycles))


random_perms = st.integers(2, 8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(Permutation)
)


class TestPermutation:
    def test_compose_identity(self):
        p = perm(3, (1, 2, 3))
        assert compose(p, Permutation.identity(3)) == p

    def test_compose_hand_derived(self):
        # x=(1 2 3), y=(1 2 3 4 5): apply x first, then y gives (1 3 2 4 5)
        x = perm(5, (1, 2, 3))
        y = perm(5, (1, 2, 3, 4, 5))
        assert compose(x, y) == perm(5, (1, 3, 2, 4, 5))

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose(perm(3, (1, 2)), perm(4, (1, 2)))

    @given(random_perms)
    def test_inverse_law(self, p):
        assert compose(p, p.inverse()).is_identity()
        assert compose(p.inverse(), p).is_identity()

    @given(random_perms, st.integers(-6, 6))
    def test_power_consistency(self, p, k):
        q = Permutation.identity(p.degree)
        step = p if k >= 0 else p.inverse()
        for _ in range(abs(k)):
            q = q * step
        assert p**k == q

    def test_wire_format_one_based(self):
        p = Permutation([2, 3, 1])
        assert p.images == [2, 3, 1]
        assert p(1) == 2 and p(3) == 1

    def test_order_and_cycles(self):
        p = perm(6, (1, 2, 3), (4, 5))
        assert p.order() == 6
        assert p.cycles() == [(1, 2, 3), (4, 5)]
        assert p.cycle_count() == 3  # includes the fixed point 6


class TestGenerate:
    def test_a5_order_60(self):
        G = generate([perm(5, (1, 2, 3)), perm(5, (1, 2, 3, 4, 5))])
        assert G.order == 60

    def test_trivial(self):
        G = generate([Permutation.identity(4)])
        assert G.order == 1

    def test_a4_model(self):
        G = generate([perm(4, (1, 2, 3)), perm(4, (1, 3, 4))])
        assert G.order == 12

    def test_empty_generators(self):
        with pytest.raises(ValueError):
            generate([])

    def test_closure_idempotent(self):
        G = generate([perm(4, (1, 2, 3)), perm(4, (1, 2))])
        assert generate(G.elements).order == G.order

    def test_named_constructors(self):
        assert symmetric_group(4).order == 24
        assert alternating_group(4).order == 12
        assert alternating_group(5).order == 60
        assert cyclic_group(6).order == 6
        assert direct_product(cyclic_group(2), cyclic_group(2)).order == 4


class TestConjugacy:
    def test_a5_class_sizes(self):
        G = alternating_group(5)
        sizes = sorted(s for _, s in G.conjugacy_classes())
        assert sizes == [1, 12, 12, 15, 20]

    def test_identity_class_first(self):
        G = symmetric_group(3)
        classes = G.conjugacy_classes()
        assert classes[0][0].is_identity() and classes[0][1] == 1
        assert sum(s for _, s in classes) == G.order

    def test_trivial_one_class(self):
        assert len(trivial_group(3).conjugacy_classes()) == 1

    def test_cyclic6_six_classes(self):
        assert len(cyclic_group(6).conjugacy_classes()) == 6

    def test_power_map_consistency(self):
        G = symmetric_group(4)
        for ci, (rep, _) in enumerate(G.conjugacy_classes()):
            for a in range(1, 7):
                for b in range(1, 7):
                    inner = G.conjugacy_classes()[G.power_map(ci, a)][0]
                    assert G.class_index_of(inner**b) == G.power_map(ci, a * b)


class TestSubgroupsAndActions:
    def test_a5_point_stabilizer(self):
        G = alternating_group(5)
        S = G.stabilizer(1)
        assert S.order == 12

    def test_orbit_stabilizer(self):
        G = symmetric_group(4)
        for pt in range(1, 5):
            assert G.stabilizer(pt).order * 4 == G.order

    def test_stabilizer_out_of_range(self):
        with pytest.raises(ValueError):
            symmetric_group(3).stabilizer(5)

    def test_normalizer_self_normalizing_a4_in_a5(self):
        G = alternating_group(5)
        S = G.stabilizer(1)
        assert G.normalizer(S).order == 12

    def test_normalizer_trivial_and_full(self):
        G = symmetric_group(3)
        assert G.normalizer(G).order == G.order
        assert G.normalizer(trivial_group(3)).order == G.order

    def test_normalizer_requires_subgroup(self):
        with pytest.raises(ValueError):
            # not a subgroup: wrong degree entirely
            symmetric_group(3).normalizer(symmetric_group(4))

    def test_coset_action_quotient(self):
        # V4 inside A4 is normal of index 3
        A4 = alternating_group(4)
        V4 = generate([perm(4, (1, 2), (3, 4)), perm(4, (1, 3), (2, 4))])
        image, reps, project = A4.coset_action(V4)
        assert len(reps) == 3
        assert image.order == 3

    def test_coset_action_full_subgroup(self):
        G = symmetric_group(3)
        image, reps, _ = G.coset_action(G)
        assert image.order == 1 and len(reps) == 1

    def test_coset_action_order2_in_v4(self):
        V4 = generate([perm(4, (1, 2), (3, 4)), perm(4, (1, 3), (2, 4))])
        J = generate([perm(4, (1, 2), (3, 4))])
        image, reps, project = V4.coset_action(J)
        assert image.order == 2

    def test_coset_action_projection_is_homomorphism(self):
        G = symmetric_group(4)
        S = G.stabilizer(1)
        image, reps, project = G.coset_action(S)
        assert image.degree == 4
        for a in G.generators:
            for b in G.generators:
                assert project(a * b) == project(a) * project(b)

    def test_regular_representation(self):
        G = symmetric_group(3)
        R, elts = regular_representation(G)
        assert R.degree == 6 and R.order == 6
        # regular action is free: nonidentity elements fix nothing
        for g in R.elements:
            if not g.is_identity():
                assert all(g.imgs[i] != i for i in range(6))
