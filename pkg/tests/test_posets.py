import pytest
from hypothesis import given, settings, strategies as st

from homlab.errors import InvalidParameterError
from homlab.posets import (
    FinitePoset,
    embed_divisibility,
    embed_poset_to_odd_sets,
    odd_set_leq,
    odd_sets_to_cycle_family,
    random_poset,
)

from oracles import all_labeled_posets


def poset_from_pairs(n, pairs):
    names = tuple(f"e{i}" for i in range(n))
    return FinitePoset(names, tuple((f"e{i}", f"e{j}") for i, j in pairs))


class TestFinitePoset:
    def test_closure_is_computed(self):
        q = poset_from_pairs(3, [(0, 1), (1, 2)])
        assert q.leq("e0", "e2")

    def test_antisymmetry_enforced(self):
        with pytest.raises(InvalidParameterError):
            poset_from_pairs(3, [(0, 1), (1, 2), (2, 0)])

    def test_duplicate_elements_rejected(self):
        with pytest.raises(InvalidParameterError):
            FinitePoset(("a", "a"))

    def test_unknown_element_rejected(self):
        with pytest.raises(InvalidParameterError):
            FinitePoset(("a",), (("a", "b"),))
        q = FinitePoset(("a",))
        with pytest.raises(InvalidParameterError):
            q.leq("a", "zz")

    def test_down_and_up_sets(self):
        q = poset_from_pairs(3, [(0, 1), (0, 2)])
        assert q.down_set("e1") == ("e0", "e1")
        assert q.up_set("e0") == ("e0", "e1", "e2")


class TestOddSetOrder:
    def test_worked_examples(self):
        assert odd_set_leq(frozenset({9, 15}), frozenset({3}))
        assert not odd_set_leq(frozenset({3}), frozenset({9}))
        assert odd_set_leq(frozenset({15}), frozenset({3, 5}))

    def test_reflexive(self):
        a = frozenset({3, 25, 21})
        assert odd_set_leq(a, a)

    def test_rejects_bad_sets(self):
        with pytest.raises(InvalidParameterError):
            odd_set_leq(frozenset(), frozenset({3}))
        with pytest.raises(InvalidParameterError):
            odd_set_leq(frozenset({4}), frozenset({3}))
        with pytest.raises(InvalidParameterError):
            odd_set_leq(frozenset({1}), frozenset({3}))

    @given(st.lists(st.sets(st.sampled_from([3, 5, 7, 9, 15, 21, 35, 45]),
                            min_size=1, max_size=4),
                    min_size=3, max_size=3))
    @settings(max_examples=200, deadline=None)
    def test_transitive(self, sets):
        a, b, c = (frozenset(s) for s in sets)
        if odd_set_leq(a, b) and odd_set_leq(b, c):
            assert odd_set_leq(a, c)


class TestEmbedding:
    def test_two_chain(self):
        q = FinitePoset(("a", "b"), (("b", "a"),))
        assert embed_divisibility(q) == {"a": 3, "b": 15}
        u = embed_poset_to_odd_sets(q)
        assert u == {"a": frozenset({3}), "b": frozenset({15})}

    def test_two_antichain(self):
        q = FinitePoset(("a", "b"))
        assert embed_divisibility(q) == {"a": 3, "b": 5}
        assert embed_poset_to_odd_sets(q) == {"a": frozenset({3}),
                                              "b": frozenset({5})}

    def test_vee(self):
        q = FinitePoset(("a", "b", "c"), (("a", "b"), ("a", "c")))
        u = embed_poset_to_odd_sets(q)
        assert u == {"a": frozenset({3}), "b": frozenset({3, 5}),
                     "c": frozenset({3, 7})}

    def test_order_parameter_is_validated(self):
        q = FinitePoset(("a", "b"))
        with pytest.raises(InvalidParameterError):
            embed_divisibility(q, order=("a",))
        with pytest.raises(InvalidParameterError):
            embed_divisibility(q, order=("a", "a"))

    def test_phi_value_is_a_member(self):
        q = poset_from_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        phi = embed_divisibility(q)
        u = embed_poset_to_odd_sets(q)
        for x in q.elements:
            assert phi[x] in u[x]


def relation_pairs(order_bits, n):
    """Decode an oracle poset (frozenset of index pairs) to names."""
    return tuple((f"e{i}", f"e{j}") for i, j in order_bits if i != j)


class TestEmbeddingIsExact:
    @pytest.mark.parametrize("n,count", [(2, 3), (3, 19), (4, 219)])
    def test_labeled_poset_counts(self, n, count):
        assert len(all_labeled_posets(n)) == count

    def test_every_small_poset_embeds_faithfully(self):
        for n in range(1, 5):
            for rel in all_labeled_posets(n):
                q = FinitePoset(tuple(f"e{i}" for i in range(n)),
                                relation_pairs(rel, n))
                u = embed_poset_to_odd_sets(q)
                for x in q.elements:
                    for y in q.elements:
                        assert odd_set_leq(u[x], u[y]) == q.leq(x, y), \
                            (n, sorted(rel), x, y)

    def test_random_posets_embed_faithfully(self):
        for seed in range(60):
            q = random_poset(5 + seed % 2, relation_probability=0.4, seed=seed)
            u = embed_poset_to_odd_sets(q)
            for x in q.elements:
                for y in q.elements:
                    assert odd_set_leq(u[x], u[y]) == q.leq(x, y)

    def test_divisibility_guarantee(self):
        # x below y with positions respecting the order iff phi(y) | phi(x)
        for seed in range(30):
            q = random_poset(5, relation_probability=0.4, seed=seed)
            phi = embed_divisibility(q)
            pos = {x: i for i, x in enumerate(q.elements)}
            for x in q.elements:
                for y in q.elements:
                    backward = q.leq(x, y) and pos[x] >= pos[y]
                    assert backward == (phi[x] % phi[y] == 0)


class TestCycleFamily:
    def test_single_member(self):
        fam = odd_sets_to_cycle_family(frozenset({3}))
        assert fam.vertex_count == 3
        assert sorted(fam.arcs) == [(0, 1), (1, 2), (2, 0)]

    def test_two_members_sorted(self):
        fam = odd_sets_to_cycle_family(frozenset({9, 3}))
        assert fam.vertex_count == 12
        assert fam.find_label("0:len3") == 0
        assert fam.find_label("1:len9") == 3

    def test_size_bound(self):
        with pytest.raises(InvalidParameterError):
            odd_sets_to_cycle_family(frozenset({10001}))
        with pytest.raises(InvalidParameterError):
            odd_sets_to_cycle_family(frozenset({3}), max_vertices=2)


class TestRandomPoset:
    def test_deterministic(self):
        a = random_poset(6, seed=11)
        b = random_poset(6, seed=11)
        assert a.elements == b.elements and a.relation == b.relation

    def test_is_valid_poset(self):
        for seed in range(20):
            q = random_poset(6, relation_probability=0.5, seed=seed)
            for x in q.elements:
                for y in q.elements:
                    if q.leq(x, y) and q.leq(y, x):
                        assert x == y
