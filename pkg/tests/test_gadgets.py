"""Constructions: arc substitution, the indicator search, sparse
companions, cycle blocks, incomparable pairs, the interval gadget, and
density witnesses. Expensive searches come from the session fixtures;
every released artifact is re-verified here with direct solver calls."""

import pytest

from homlab.errors import (
    ConstructionRejectedError,
    GapError,
    InvalidParameterError,
    PreconditionError,
    StreamExhaustedError,
)
from homlab.gadgets import (
    CheckRecord,
    GadgetRecipe,
    PointedGraph,
    VerifiedConstruction,
    build_block_family,
    build_cycle_block,
    build_indicator,
    build_interval_gadget,
    density_witness,
    find_sparse_incomparable,
    incomparable_pair,
    indicate,
)
from homlab.graphs import (
    Digraph,
    Graph,
    analyze,
    chvatal_graph,
    complete_graph,
    disjoint_union,
    grotzsch_graph,
    make_cycle,
    mcgee_graph,
)
from homlab.solver import (
    SolverBudget,
    compare,
    count_homs,
    hom_exists,
    is_isomorphic,
    verify_mapping,
)

from oracles import brute_girth

BUDGET = SolverBudget(timeout_secs=1800.0)


class TestRecipeTypes:
    def test_pointed_graph_bounds(self):
        g = make_cycle(5)
        with pytest.raises(InvalidParameterError):
            PointedGraph(g, 0, 0)
        with pytest.raises(InvalidParameterError):
            PointedGraph(g, 0, 5)
        with pytest.raises(InvalidParameterError):
            PointedGraph(g, -1, 2)
        assert PointedGraph(g, 0, 2).b == 2

    def test_recipe_validation(self):
        for bad in (4, 3, 1, -5, 5.0):
            with pytest.raises(InvalidParameterError):
                GadgetRecipe(bad, 0, 3)
        with pytest.raises(InvalidParameterError):
            GadgetRecipe(5, -1, 3)
        with pytest.raises(InvalidParameterError):
            GadgetRecipe(5, 0, 0)
        recipe = GadgetRecipe(7, 2, 3)
        assert (recipe.l, recipe.attachment, recipe.path_length) == (7, 2, 3)

    def test_construction_release_gate(self):
        with pytest.raises(InvalidParameterError):
            VerifiedConstruction(make_cycle(3), (CheckRecord("girth", False),))
        built = VerifiedConstruction(make_cycle(3), (CheckRecord("girth", True),))
        assert built.check("girth").passed
        with pytest.raises(InvalidParameterError):
            built.check("missing")
        with pytest.raises(InvalidParameterError):
            VerifiedConstruction((1, 2)).graph


class TestIndicate:
    def test_path_indicator_on_directed_triangle(self):
        # a path a-m-b substituted into each arc of the directed triangle
        # gives the 6-cycle: one fresh vertex per arc
        pointed = PointedGraph(Graph(3, ((0, 1), (1, 2))), 0, 2)
        out = indicate(make_cycle(3, directed=True), pointed)
        assert out.vertex_count == 6
        assert out.edge_count == 6
        assert analyze(out).girth == brute_girth(out) == 6
        names = {name for _, name in out.labels}
        assert {"g0", "g1", "g2", "0:1", "1:1", "2:1"} == names

    def test_substitution_arithmetic_at_ten_vertex_body(self):
        # a 10-vertex body on a 15-cycle: 15 + 15*8 vertices
        pointed = PointedGraph(make_cycle(10), 0, 5)
        out = indicate(make_cycle(15, directed=True), pointed)
        assert out.vertex_count == 15 + 15 * 8 == 135
        assert out.edge_count == 15 * 10
        assert len(out.labels) == out.vertex_count
        assert len({name for _, name in out.labels}) == out.vertex_count

    def test_copies_share_only_endpoints(self):
        pointed = PointedGraph(make_cycle(10), 0, 5)
        out = indicate(make_cycle(3, directed=True), pointed)
        # every copy is a 10-cycle through its two endpoints; the
        # shortest cycle is inside one copy
        assert brute_girth(out) == 10

    def test_rejects_undirected_left(self):
        pointed = PointedGraph(make_cycle(10), 0, 5)
        with pytest.raises(InvalidParameterError):
            indicate(make_cycle(3), pointed)

    def test_rejects_disconnected_indicator(self):
        pointed = PointedGraph(Graph(4, ((0, 1), (2, 3))), 0, 2)
        with pytest.raises(PreconditionError):
            indicate(make_cycle(3, directed=True), pointed)


class TestBuildIndicator:
    def test_length_five_winner(self, indicator5):
        built = indicator5.value
        body = built.payload.graph
        assert (body.vertex_count, body.edge_count) == (13, 15)
        assert (built.payload.a, built.payload.b) == (0, 1)
        assert [c.name for c in built.checks] == [
            "rigid", "hom_to_cycle", "hom_identifying_ab", "girth"]
        assert all(c.passed for c in built.checks)

    def test_length_five_reverified(self, indicator5):
        built = indicator5.value
        body = built.payload.graph
        assert count_homs(body, body, limit=2) == 1
        assert brute_girth(body) == 7
        c5 = make_cycle(5)
        witness = built.check("hom_to_cycle").witness
        assert verify_mapping(body, c5, witness)
        a, b = built.payload.a, built.payload.b
        assert any(
            hom_exists(body, c5, pinned={a: v, b: v}) is not None
            for v in range(5))

    def test_length_seven_winner(self, indicator7):
        built = indicator7.value
        body = built.payload.graph
        assert (body.vertex_count, body.edge_count) == (17, 19)
        assert all(c.passed for c in built.checks)
        assert brute_girth(body) == 9
        assert count_homs(body, body, limit=2) == 1
        assert hom_exists(body, make_cycle(7)) is not None

    def test_rejects_bad_length(self):
        for bad in (4, 3, 1, -5):
            with pytest.raises(InvalidParameterError):
                build_indicator(bad)


class TestFindSparseIncomparable:
    def test_winner_for_five_cycle_triangle(self, sparse_companion):
        found = sparse_companion.value
        assert is_isomorphic(found.graph, mcgee_graph())
        assert [c.name for c in found.checks] == [
            "not_below_left", "not_above_left", "below_right",
            "girth", "connected"]
        assert all(c.passed for c in found.checks)

    def test_winner_reverified(self, sparse_companion):
        f = sparse_companion.value.graph
        c5 = make_cycle(5)
        assert hom_exists(f, c5, BUDGET) is None
        assert hom_exists(c5, f, BUDGET) is None
        witness = sparse_companion.value.check("below_right").witness
        assert verify_mapping(f, complete_graph(3), witness)
        assert brute_girth(f) == 7

    def test_preconditions(self):
        k3 = complete_graph(3)
        c5 = make_cycle(5)
        with pytest.raises(PreconditionError):
            find_sparse_incomparable(make_cycle(6), k3, 7)
        with pytest.raises(PreconditionError):
            find_sparse_incomparable(c5, make_cycle(6), 7)
        with pytest.raises(PreconditionError):
            find_sparse_incomparable(k3, c5, 7)
        with pytest.raises(PreconditionError):
            find_sparse_incomparable(
                c5, disjoint_union([k3, k3]), 7)
        with pytest.raises(InvalidParameterError):
            find_sparse_incomparable(c5, k3, 2)

    def test_custom_stream(self):
        c5 = make_cycle(5)
        k3 = complete_graph(3)
        # an odd cycle is comparable with the lower bound, so a stream
        # of only odd cycles exhausts
        with pytest.raises(StreamExhaustedError):
            find_sparse_incomparable(c5, k3, 7, candidates=[make_cycle(9)])
        found = find_sparse_incomparable(c5, k3, 7, candidates=[mcgee_graph()])
        assert is_isomorphic(found.graph, mcgee_graph())


class TestCycleBlocks:
    def test_block_arithmetic(self, indicator5, sparse_companion):
        indicator = indicator5.value.payload
        sparse = sparse_companion.value.graph
        recipe = GadgetRecipe(5, 0, 3)
        block = build_cycle_block(3, recipe, sparse, indicator)
        inner = indicator.graph.vertex_count - 2
        expected = 15 + 15 * inner + sparse.vertex_count + (recipe.path_length - 1)
        assert block.vertex_count == expected
        assert analyze(block).connected
        names = [name for _, name in block.labels]
        assert names.count("u") == 1
        assert sum(1 for n in names if n.startswith("F:")) == sparse.vertex_count - 1
        assert {"link:0", "link:1"} <= set(names)

    def test_block_validation(self, indicator5, sparse_companion):
        indicator = indicator5.value.payload
        sparse = sparse_companion.value.graph
        recipe = GadgetRecipe(5, 0, 3)
        for bad in (4, 2, 1, -3):
            with pytest.raises(InvalidParameterError):
                build_cycle_block(bad, recipe, sparse, indicator)
        with pytest.raises(InvalidParameterError):
            build_cycle_block(3, GadgetRecipe(5, 99, 3), sparse, indicator)

    def test_family_assembly(self, indicator5, sparse_companion, c5):
        indicator = indicator5.value.payload
        sparse = sparse_companion.value.graph
        recipe = GadgetRecipe(5, 0, 3)
        single = build_cycle_block(3, recipe, sparse, indicator)
        family = build_block_family({3}, recipe, sparse, indicator, c5)
        assert family.vertex_count == single.vertex_count + 5
        names = [name for _, name in family.labels]
        assert sum(1 for n in names if n.startswith("p3:")) == single.vertex_count
        assert sum(1 for n in names if n.startswith("base:")) == 5
        with pytest.raises(InvalidParameterError):
            build_block_family(set(), recipe, sparse, indicator, c5)
        with pytest.raises(InvalidParameterError):
            build_block_family({3, 4}, recipe, sparse, indicator, c5)

    def test_family_monotone_in_the_set_order(self, indicator5,
                                              sparse_companion, c5):
        # {5} is below {3,5} in the odd-set order but {3,5} is not below
        # {5}; the block families must agree
        indicator = indicator5.value.payload
        sparse = sparse_companion.value.graph
        recipe = GadgetRecipe(5, 0, 3)
        small = build_block_family({5}, recipe, sparse, indicator, c5)
        large = build_block_family({3, 5}, recipe, sparse, indicator, c5)
        assert hom_exists(small, large, BUDGET) is not None
        assert hom_exists(large, small, BUDGET) is None


class TestIncomparablePair:
    def test_pair_checks(self, pair_between):
        pair = pair_between.value
        assert [c.name for c in pair.checks] == [
            "lower_into_first", "first_avoids_lower", "first_into_upper",
            "upper_avoids_first", "lower_into_second", "second_avoids_lower",
            "second_into_upper", "upper_avoids_second",
            "first_avoids_second", "second_avoids_first"]
        assert all(c.passed for c in pair.checks)

    def test_pair_reverified(self, pair_between, c5, k3):
        first, second = pair_between.value.payload
        assert hom_exists(first, second, BUDGET) is None
        assert hom_exists(second, first, BUDGET) is None
        assert hom_exists(c5, first, BUDGET) is not None
        assert hom_exists(first, c5, BUDGET) is None
        assert hom_exists(second, k3, BUDGET) is not None
        assert hom_exists(k3, second, BUDGET) is None

    def test_pair_shape(self, pair_between):
        first, _ = pair_between.value.payload
        names = {name for _, name in first.labels}
        assert any(n.startswith("prod:") for n in names)
        assert any(n.startswith("base:") for n in names)

    def test_connected_variant(self, c5, k3):
        pair = incomparable_pair(
            c5, k3, candidates=[grotzsch_graph(), chvatal_graph()],
            budget=BUDGET, connected=True)
        first, second = pair.payload
        assert analyze(first).connected
        assert analyze(second).connected
        assert any(name.startswith("join:") for _, name in first.labels)

    def test_preconditions(self, c5, k3):
        with pytest.raises(PreconditionError):
            incomparable_pair(c5, make_cycle(6))
        with pytest.raises(PreconditionError):
            incomparable_pair(k3, c5)
        with pytest.raises(PreconditionError):
            incomparable_pair(c5, disjoint_union([k3, k3]))


class TestIntervalGadgetAssembly:
    def test_shape_and_fold(self):
        h1 = grotzsch_graph()
        h2 = chvatal_graph()
        k4 = complete_graph(4)
        built = build_interval_gadget(h1, h2, 13, k4, BUDGET)
        gadget = built.payload
        g = gadget.graph
        assert g.vertex_count == 11 + 12 + (2 * 13 - 1) + 2 * 13
        masks = g.adjacency_masks
        for v in (gadget.a, gadget.b):
            assert bin(masks[v]).count("1") == 2
        names = {name for _, name in g.labels}
        assert {"a", "b"} <= names
        witness = built.check("hom_identifying_ab").witness
        assert verify_mapping(g, k4, witness)
        assert witness[gadget.a] == witness[gadget.b]

    def test_rejects_bad_blocks(self):
        h1 = grotzsch_graph()
        h2 = chvatal_graph()
        k4 = complete_graph(4)
        with pytest.raises(PreconditionError):
            build_interval_gadget(make_cycle(7), make_cycle(5), 9, k4)
        with pytest.raises(PreconditionError):
            build_interval_gadget(
                disjoint_union([complete_graph(3), complete_graph(3)]),
                h2, 13, k4)
        with pytest.raises(PreconditionError):
            build_interval_gadget(h1, h2, 12, k4)

    def test_rejects_unfoldable_target(self):
        # neither block maps to the 5-cycle, so no glue map can exist
        with pytest.raises(ConstructionRejectedError):
            build_interval_gadget(grotzsch_graph(), chvatal_graph(), 13,
                                  make_cycle(5), BUDGET)


class TestDensityWitness:
    def test_gap_rejected_without_solver(self, monkeypatch):
        import homlab.gadgets as gadgets_module

        def boom(*args, **kwargs):
            raise AssertionError("solver must not run on the gap")

        monkeypatch.setattr(gadgets_module, "hom_exists", boom)
        monkeypatch.setattr(gadgets_module, "compare", boom)
        with pytest.raises(GapError):
            density_witness(Graph(1, ()), Graph(2, ((0, 1),)))

    def test_gap_shapes(self):
        with pytest.raises(GapError):
            density_witness(Graph(3, ()), make_cycle(6))

    def test_not_strictly_comparable(self, k3):
        with pytest.raises(PreconditionError):
            density_witness(k3, k3)
        with pytest.raises(PreconditionError):
            density_witness(grotzsch_graph(), chvatal_graph())

    def test_bipartite_lower_bound(self, k3):
        witness = density_witness(Graph(2, ((0, 1),)), k3)
        assert is_isomorphic(witness, make_cycle(5))

    def test_edgeless_lower_bound(self, k3):
        witness = density_witness(Graph(1, ()), k3)
        assert is_isomorphic(witness, Graph(2, ((0, 1),)))
        assert hom_exists(witness, k3) is not None
        assert hom_exists(k3, witness) is None
