import pytest
from hypothesis import given, settings, strategies as st

from homlab.errors import (
    BudgetExceededError,
    IndeterminateComparisonError,
    InvalidParameterError,
    PreconditionError,
)
from homlab.graphs import (
    Digraph,
    Graph,
    complete_graph,
    disjoint_union,
    grotzsch_graph,
    make_cycle,
    path_graph,
    petersen_graph,
    tensor_product,
)
from homlab.solver import (
    EQUIVALENT,
    INCOMPARABLE,
    STRICTLY_ABOVE,
    STRICTLY_BELOW,
    SolverBudget,
    canonical_form,
    compare,
    core_of,
    count_homs,
    hom_exists,
    is_isomorphic,
    is_rigid,
    path_threshold,
    verify_mapping,
)

from oracles import (
    brute_hom_count,
    brute_hom_exists,
    brute_is_hom,
    brute_walk_lengths,
    cycle_hom_count,
)

small_graphs = st.builds(
    lambda n, mask: Graph(
        n,
        tuple(p for i, p in enumerate((u, v) for u in range(n)
                                      for v in range(u + 1, n))
              if mask >> i & 1),
    ),
    st.integers(1, 5),
    st.integers(0, 2**10),
)

small_digraphs = st.builds(
    lambda n, mask: Digraph(
        n,
        tuple(p for i, p in enumerate((u, v) for u in range(n)
                                      for v in range(n) if u != v)
              if mask >> i & 1),
    ),
    st.integers(1, 4),
    st.integers(0, 2**12),
)


class TestAgainstBruteForce:
    @given(small_graphs, small_graphs)
    @settings(max_examples=150, deadline=None)
    def test_count_matches(self, g, h):
        assert count_homs(g, h) == brute_hom_count(g, h)

    @given(small_graphs, small_graphs)
    @settings(max_examples=150, deadline=None)
    def test_existence_matches_and_witness_checks(self, g, h):
        witness = hom_exists(g, h)
        assert (witness is not None) == brute_hom_exists(g, h)
        if witness is not None:
            assert brute_is_hom(g, h, witness.assignment)
            assert verify_mapping(g, h, witness.assignment)

    @given(small_digraphs, small_digraphs)
    @settings(max_examples=150, deadline=None)
    def test_digraph_count_matches(self, g, h):
        assert count_homs(g, h) == brute_hom_count(g, h)

    @given(small_digraphs, small_digraphs)
    @settings(max_examples=100, deadline=None)
    def test_digraph_existence_matches(self, g, h):
        witness = hom_exists(g, h)
        assert (witness is not None) == brute_hom_exists(g, h)
        if witness is not None:
            assert brute_is_hom(g, h, witness.assignment)


class TestKnownValues:
    def test_petersen_three_colorings(self):
        assert count_homs(petersen_graph(), complete_graph(3)) == 120

    def test_odd_cycle_colorings_match_trace(self):
        for n in (5, 9, 15):
            expected = cycle_hom_count(complete_graph(3), n)
            assert count_homs(make_cycle(n), complete_graph(3)) == expected
        assert count_homs(make_cycle(15), complete_graph(3)) == 2**15 - 2

    def test_odd_cycles_descend(self):
        # C_{2k+1} -> C_{2j+1} exactly when j <= k
        for p in (3, 5, 7, 9):
            for q in (3, 5, 7, 9):
                expected = q <= p
                assert (hom_exists(make_cycle(p), make_cycle(q)) is not None) \
                    == expected

    def test_grotzsch_not_three_colorable(self):
        assert hom_exists(grotzsch_graph(), complete_graph(3)) is None

    def test_directed_cycle_divisibility(self):
        def dcycle(p):
            return Digraph(p, tuple((i, (i + 1) % p) for i in range(p)))
        for p in (3, 5, 9, 15):
            for q in (3, 5, 9, 15):
                assert (hom_exists(dcycle(p), dcycle(q)) is not None) \
                    == (p % q == 0)


class TestPinnedSearch:
    def test_pin_is_respected(self):
        witness = hom_exists(make_cycle(5), petersen_graph(), pinned={0: 7})
        assert witness is not None and witness(0) == 7

    def test_conflicting_pins_yield_none(self):
        # adjacent vertices pinned to the same simple-graph vertex
        assert hom_exists(make_cycle(5), petersen_graph(),
                          pinned={0: 3, 1: 3}) is None

    def test_bad_pin_rejected(self):
        with pytest.raises(InvalidParameterError):
            hom_exists(make_cycle(5), petersen_graph(), pinned={9: 0})


class TestCompare:
    def test_equivalent(self):
        verdict = compare(make_cycle(4), path_graph(2))
        assert verdict.relation == EQUIVALENT

    def test_strictly_below(self):
        verdict = compare(make_cycle(5), complete_graph(3))
        assert verdict.relation == STRICTLY_BELOW
        assert verdict.forward is not None and verdict.backward is None

    def test_strictly_above(self):
        verdict = compare(complete_graph(3), make_cycle(5))
        assert verdict.relation == STRICTLY_ABOVE

    def test_incomparable(self):
        verdict = compare(grotzsch_graph(), complete_graph(3))
        assert verdict.relation == INCOMPARABLE


class TestCore:
    def test_even_cycle_cores_to_an_edge(self):
        core = core_of(make_cycle(6))
        assert (core.vertex_count, core.edge_count) == (2, 1)

    def test_odd_cycle_is_its_own_core(self):
        assert core_of(make_cycle(7)).vertex_count == 7

    def test_core_is_hom_equivalent(self):
        g = disjoint_union([make_cycle(4), make_cycle(3), path_graph(3)])
        core = core_of(g)
        assert hom_exists(g, core) is not None
        assert hom_exists(core, g) is not None

    def test_core_is_idempotent(self):
        g = disjoint_union([make_cycle(6), make_cycle(3)])
        once = core_of(g)
        twice = core_of(once)
        assert is_isomorphic(once, twice)

    @given(small_graphs)
    @settings(max_examples=60, deadline=None)
    def test_core_properties_hold(self, g):
        core = core_of(g)
        assert core.vertex_count <= g.vertex_count
        assert brute_hom_exists(g, core) or g.vertex_count == 0
        assert brute_hom_exists(core, g) or g.vertex_count == 0
        # a core admits no hom to any proper induced subgraph
        for drop in range(core.vertex_count):
            keep = [v for v in range(core.vertex_count) if v != drop]
            assert not brute_hom_exists(core, core.induced(keep))

    def test_digraph_input_rejected(self):
        with pytest.raises(InvalidParameterError):
            core_of(Digraph(2, ((0, 1),)))


class TestRigidity:
    def test_cycles_are_not_rigid(self):
        assert not is_rigid(make_cycle(5))

    def test_single_vertex_is_rigid(self):
        assert is_rigid(Graph(1))

    def test_asymmetric_tree_is_not_rigid(self):
        # trees fold, so no tree beyond a single vertex is rigid
        spider = Graph(5, ((0, 1), (1, 2), (0, 3), (3, 4)))
        assert not is_rigid(spider)


class TestProductProperty:
    @given(small_graphs, small_graphs, small_graphs)
    @settings(max_examples=60, deadline=None)
    def test_product_is_categorical(self, x, a, b):
        to_product = hom_exists(x, tensor_product(a, b)) is not None
        separately = (hom_exists(x, a) is not None
                      and hom_exists(x, b) is not None)
        assert to_product == separately


class TestPathThreshold:
    def test_known_values(self):
        assert path_threshold(complete_graph(3)) == 2
        assert path_threshold(make_cycle(5)) == 4

    @pytest.mark.parametrize("g", [
        complete_graph(3),
        make_cycle(5),
        petersen_graph(),
        complete_graph(4),
    ])
    def test_matches_walk_oracle(self, g):
        value = path_threshold(g)
        walks = brute_walk_lengths(g, value + 1)
        n = g.vertex_count

        def total(l):
            return all(walks[l][u][v] for u in range(n) for v in range(n))

        assert total(value) and total(value + 1)
        assert not (total(value - 1) and total(value)) if value > 1 else True

    def test_bipartite_rejected(self):
        with pytest.raises(PreconditionError):
            path_threshold(make_cycle(4))

    def test_disconnected_rejected(self):
        with pytest.raises(PreconditionError):
            path_threshold(disjoint_union([make_cycle(3), make_cycle(3)]))


class TestBudgets:
    def test_node_limit_trips(self):
        tight = SolverBudget(timeout_secs=300.0, node_limit=1)
        with pytest.raises(BudgetExceededError):
            count_homs(petersen_graph(), petersen_graph(), tight)

    def test_compare_reports_indeterminate(self):
        tight = SolverBudget(timeout_secs=300.0, node_limit=1)
        with pytest.raises(IndeterminateComparisonError):
            compare(petersen_graph(), grotzsch_graph(), tight)

    def test_bad_budget_rejected(self):
        with pytest.raises(InvalidParameterError):
            SolverBudget(timeout_secs=0.0)
        with pytest.raises(InvalidParameterError):
            SolverBudget(timeout_secs=1.0, node_limit=0)

    def test_count_limit(self):
        full = count_homs(make_cycle(5), complete_graph(3))
        assert full == 30
        capped = count_homs(make_cycle(5), complete_graph(3), limit=7)
        assert 7 <= capped <= full
        assert capped == count_homs(make_cycle(5), complete_graph(3), limit=7)
        assert count_homs(make_cycle(5), complete_graph(3), limit=500) == 30
        with pytest.raises(InvalidParameterError):
            count_homs(make_cycle(5), complete_graph(3), limit=0)


class TestVerifyMapping:
    def test_rejects_partial_maps(self):
        assert not verify_mapping(make_cycle(3), make_cycle(3), (0, 1))

    def test_rejects_out_of_range(self):
        assert not verify_mapping(make_cycle(3), make_cycle(3), (0, 1, 7))

    def test_rejects_edge_breaking(self):
        assert not verify_mapping(make_cycle(3), make_cycle(3), (0, 0, 1))

    def test_accepts_rotation(self):
        assert verify_mapping(make_cycle(3), make_cycle(3), (1, 2, 0))

    def test_kind_mismatch_rejected(self):
        with pytest.raises(InvalidParameterError):
            hom_exists(Digraph(2, ((0, 1),)), make_cycle(3))


class TestIsomorphism:
    def test_relabeled_graphs_are_isomorphic(self):
        g = petersen_graph()
        perm = tuple((3 * i + 1) % 10 for i in range(10))
        assert is_isomorphic(g, g.relabeled(perm))

    def test_same_degree_sequence_not_isomorphic(self):
        assert not is_isomorphic(make_cycle(6),
                                 disjoint_union([make_cycle(3), make_cycle(3)]))

    def test_canonical_form_is_invariant(self):
        g = make_cycle(6)
        perm = (2, 4, 0, 5, 1, 3)
        assert canonical_form(g) == canonical_form(g.relabeled(perm))

    @given(small_digraphs, st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_digraph_canonical_form_is_invariant(self, d, rng):
        perm = list(range(d.vertex_count))
        rng.shuffle(perm)
        assert canonical_form(d) == canonical_form(d.relabeled(tuple(perm)))
