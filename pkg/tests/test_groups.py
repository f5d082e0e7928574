import pytest

from belyilab.errors import PreconditionError
from belyilab.groups import (
    TableGroup,
    automorphisms,
    cyclic_table,
    homomorphism_from_generators,
    isomorphic,
)
from belyilab.permgroup import Permutation, generate


def perm(n, *cycles):
    return Permutation.from_cycles(n, list(cycles))


def s3_table():
    return TableGroup.from_permgroup(generate([perm(3, (1, 2, 3)), perm(3, (1, 2))]))


class TestTableGroup:
    def test_bad_table_rejected(self):
        with pytest.raises(PreconditionError):
            TableGroup([[0, 0], [1, 1]])
        with pytest.raises(PreconditionError):
            TableGroup([[1, 0], [0, 1]])  # 0 is not the identity

    def test_cyclic_orders(self):
        T = cyclic_table(6)
        assert sorted(T.order_of(a) for a in range(6)) == [1, 2, 3, 3, 6, 6]
        assert T.inv[1] == 5

    def test_from_permgroup_s3(self):
        T = s3_table()
        assert T.n == 6 and not T.is_abelian()
        assert T.order_profile() == {1: 1, 2: 3, 3: 2}

    def test_closure_and_generation(self):
        T = cyclic_table(6)
        assert T.closure([2]) == [0, 2, 4]
        assert T.generates([1])
        assert not T.generates([2, 3]) or len(T.closure([2, 3])) == 6
        assert T.generates([2, 3])

    def test_words_reconstruct(self):
        T = s3_table()
        gens = T.small_generating_set()
        word = T.words(gens)
        for a in range(T.n):
            v = 0
            for gi in word[a]:
                v = T.mult(v, gens[gi])
            assert v == a


class TestHomomorphisms:
    def test_quotient_map(self):
        src = cyclic_table(4)
        dst = cyclic_table(2)
        f = homomorphism_from_generators(src, dst, [1], [1])
        assert f == [0, 1, 0, 1]

    def test_non_homomorphism_is_none(self):
        # no homomorphism Z/4 -> Z/3 sends the generator to 1
        src = cyclic_table(4)
        dst = cyclic_table(3)
        assert homomorphism_from_generators(src, dst, [1], [1]) is None

    def test_doubling_is_an_endomorphism(self):
        src = cyclic_table(4)
        assert homomorphism_from_generators(src, src, [1], [2]) == [0, 2, 0, 2]

    def test_automorphism_counts(self):
        assert len(automorphisms(cyclic_table(5))) == 4
        assert len(automorphisms(s3_table())) == 6
        v4 = TableGroup.from_permgroup(
            generate([perm(4, (1, 2), (3, 4)), perm(4, (1, 3), (2, 4))])
        )
        assert len(automorphisms(v4)) == 6

    def test_isomorphic(self):
        z6 = cyclic_table(6)
        z6b = TableGroup.from_permgroup(generate([perm(6, (1, 2, 3, 4, 5, 6))]))
        assert isomorphic(z6, z6b)
        assert not isomorphic(z6, s3_table())
